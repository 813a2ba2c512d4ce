import sys

from majlab.cli import main

sys.exit(main())

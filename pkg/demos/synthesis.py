# Building an actual electorate for a requested outcome, and checking it by tally.
from majlab import (
    ChoiceFunction,
    cyclic,
    linear_order,
    majority_outcome,
    partisan,
    synth_any,
    tally,
)
from majlab.core import pairs

n = 4
target = cyclic(n, [0, 1, 2, 3])

report = synth_any([cyclic(n, [0, 1, 2])], target)
print(f"4-cycle from 3-cycle voters: {report.total_voters} voters (bound {report.bound})")
print("distinct ballots:", len(report.profile))
t = tally(report.profile)
for x, y in pairs(n):
    print(f"  {x} vs {y}: {t[x, y]:+d}")
assert majority_outcome(report.profile) == target

# A full ranking from voters who only ever express "0 beats 1 and 2".
lin = linear_order(n, [3, 1, 0, 2])
chaos = synth_any([ChoiceFunction.from_edges(n, [(0, 1), (0, 2)])], lin)
print(f"ranking 3>1>0>2 from two-edge voters: {chaos.total_voters} voters, bound {chaos.bound}")

# A single edge from a mix of 3-cycle and partisan voters.
edge = ChoiceFunction.from_edges(n, [(1, 0)])
mixed = synth_any([cyclic(n, [0, 1, 2]), partisan(n, [0])], edge)
print(f"lone edge 1>0 from mixed voters: {mixed.total_voters} voters, outcome",
      [f"{w}>{l}" for w, l in majority_outcome(mixed.profile).edges()])

"""Majority decisions when voters may abstain.

Classify symmetric classes of partial choice functions, decide which outcomes a
class can produce by strict majority, and build explicit electorates that
produce them.
"""

from majlab.classify import (
    Category,
    ClassCategory,
    SymmetricClass,
    ValenceDecomposition,
    ValencePoint,
    classify_class,
    is_balanced,
    is_chaotic,
    is_partisan,
    is_pseudo_balanced,
    is_tiered,
    is_valence_imbalanced,
    valence_pairs,
)
from majlab.closure import (
    MembershipVerdict,
    NotInClosureError,
    decide_fast,
    decide_lp,
    enumerate_closure,
    weights_to_profile,
)
from majlab.core import (
    ChoiceFunction,
    IntTally,
    Permutation,
    VoterProfile,
    WeightMatrix,
    canonical_key,
    cyclic,
    linear_order,
    maj,
    majority_outcome,
    orbit,
    partisan,
    perms_fixing,
    permute,
    pr,
    tally,
    valence,
    valences,
    weight,
)
from majlab.synth import SynthesisReport, synth_any, voter_bound

__version__ = "0.1.0"

__all__ = [
    "canonical_key",
    "Category",
    "ChoiceFunction",
    "ClassCategory",
    "classify_class",
    "cyclic",
    "decide_fast",
    "decide_lp",
    "enumerate_closure",
    "IntTally",
    "is_balanced",
    "is_chaotic",
    "is_partisan",
    "is_pseudo_balanced",
    "is_tiered",
    "is_valence_imbalanced",
    "linear_order",
    "maj",
    "majority_outcome",
    "MembershipVerdict",
    "NotInClosureError",
    "orbit",
    "partisan",
    "perms_fixing",
    "Permutation",
    "permute",
    "pr",
    "SymmetricClass",
    "synth_any",
    "SynthesisReport",
    "tally",
    "valence",
    "valence_pairs",
    "ValenceDecomposition",
    "ValencePoint",
    "valences",
    "voter_bound",
    "VoterProfile",
    "weight",
    "WeightMatrix",
    "weights_to_profile",
]

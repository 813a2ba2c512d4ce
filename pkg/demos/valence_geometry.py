# Valence points of a function: for each pair (u, w) with weight tag, the point
# (val(u) - tag, val(w) + tag).  An imbalanced-but-not-partisan function always
# has the origin as a convex combination with more weight on +1 than on -1.
from majlab import ChoiceFunction, linear_order, partisan
from majlab.classify import is_chaotic, is_valence_imbalanced, valence_pairs
from majlab.core import valences


def show(label, c):
    print(f"== {label}: valences {valences(c)}, chaotic={is_chaotic(c)}")
    for tag in (1, 0, -1):
        print(f"   tag {tag:+d}:", [v.point for v in valence_pairs(c, tag)])
    dec = is_valence_imbalanced(c)
    if dec is None:
        print("   no imbalanced combination")
        return
    terms = " + ".join(f"{q}*{v.point}[{v.tag:+d}]" for v, q in dec.terms)
    print(f"   (0, 0) = {terms}, imbalance {dec.imbalance}")


show("two edges out of 0", ChoiceFunction.from_edges(4, [(0, 1), (0, 2)]))
show("linear order", linear_order(4, range(4)))
show("partisan {0, 1}", partisan(4, [0, 1]))

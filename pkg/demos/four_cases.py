# What can a symmetric class of voters produce by strict majority?
# Four representative classes on four candidates, and how much of the 729
# possible outcomes each one reaches.
from collections import Counter

from majlab import ChoiceFunction, classify_class, cyclic, enumerate_closure, partisan
from majlab.classify import is_pseudo_balanced, is_tiered

n = 4
classes = {
    "abstainers only": [ChoiceFunction.empty(n)],
    "a 3-cycle": [cyclic(n, [0, 1, 2])],
    "one candidate over the rest": [partisan(n, [0])],
    "3-cycle plus partisan": [cyclic(n, [0, 1, 2]), partisan(n, [0])],
    "0 beats 1 and 2, nothing else": [ChoiceFunction.from_edges(n, [(0, 1), (0, 2)])],
}

for label, gens in classes.items():
    cat = classify_class(gens)
    members = enumerate_closure(gens)
    print(f"{label:32s} {cat.kind.value:9s} reaches {len(members):3d} of {3 ** 6}")

# The balanced class reaches exactly the functions whose every edge sits on a cycle,
# the partisan class exactly the layered ones.
bal = enumerate_closure(classes["a 3-cycle"])
print("all balanced outcomes pseudo-balanced:", all(is_pseudo_balanced(d) for d in bal))
par = enumerate_closure(classes["one candidate over the rest"])
print("tier counts among partisan outcomes:", sorted(Counter(len(is_tiered(d)) for d in par).items()))

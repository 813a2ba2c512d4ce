# Three voters, three cyclic rankings: every candidate loses some head-to-head vote.
from majlab import VoterProfile, linear_order, majority_outcome, tally

orders = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
profile = VoterProfile.of(3, [linear_order(3, o) for o in orders])

t = tally(profile)
print("net votes:")
for x, y in [(0, 1), (1, 2), (2, 0)]:
    print(f"  {x} over {y}: {t[x, y]:+d}")

outcome = majority_outcome(profile)
print("majority outcome:", " ".join(f"{w}>{l}" for w, l in outcome.edges()))
print("transitive?", outcome.weight(0, 2) == 1)

# A fourth voter ranking 0>1>2 cancels 2>0, leaving {0, 2} tied and a transitive outcome.
profile = profile | VoterProfile.of(3, [linear_order(3, (0, 1, 2))])
print("after a fourth voter:", " ".join(f"{w}>{l}" for w, l in majority_outcome(profile).edges()))

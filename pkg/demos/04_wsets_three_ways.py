"""W-sets computed directly and certified against the chain oracle.

The W-set of an element collects the permutations read off its labeled
maximal chains; each family also has a direct construction that never
touches the poset.  The two must agree, and the fixed-point-free sets
embed into the all-involutions sets by one fixed right factor.
"""

from weakorder import (
    Clan,
    FpfInvolution,
    Involution,
    bottom_element,
    build_poset,
    check_conditions_involution,
    wset_direct,
    wset_fpf,
    wset_involution,
    wset_oracle,
    wstar,
)
from weakorder.permutations import compose, length

pi = Involution.from_cycles(4, [(1, 4), (2, 3)])
ws = wset_involution(pi)
print(f"W({pi.text()}) at rank {ws.rank}:")
for w in ws.members:
    print(f"  {w.as_text(compact=True)}   passes conditions: "
          f"{check_conditions_involution(w, pi)}")
print()

P = build_poset("involution", 4)
print(f"chain oracle agrees: {wset_oracle(P, pi).members == ws.members}")
print()

tau = FpfInvolution.from_cycles(6, [(1, 6), (2, 5), (3, 4)])
print(f"W'({tau.text()}) = "
      f"{[w.as_text(compact=True) for w in wset_fpf(tau).members]}")
print()

c = Clan.from_parts(4, [], {1: 1, 2: -1, 3: 1, 4: 1})
print(f"W({c.text()}) = "
      f"{[w.as_text(compact=True) for w in wset_direct('clan', c).members]}")
print()

# right-multiplying by w* carries fpf W-sets into involution W-sets
n = 4
w_star = wstar(n)
alpha = bottom_element("fpf", n).as_involution()
print(f"w* = {w_star} and W({alpha.text()}) = "
      f"{[str(w) for w in wset_involution(alpha).members]}")
rho = FpfInvolution.from_cycles(4, [(1, 4), (2, 3)])
small = wset_fpf(rho).members
big = set(wset_involution(rho.as_involution()).members)
print(f"W'({rho.text()}) * w* lands inside W({rho.text()}):")
for v in small:
    prod = compose(v, w_star)
    print(f"  {v.as_text(compact=True)} * w* = {prod.as_text(compact=True)}, "
          f"member: {prod in big}, length {length(v)} + {length(w_star)} "
          f"= {length(prod)}")
extra = big - {compose(v, w_star) for v in small}
print(f"members of the larger set not hit: "
      f"{[w.as_text(compact=True) for w in sorted(extra, key=lambda w: w.word)]}")

"""The weak order on involutions of S_4, explored from the bottom up.

Elements are involutions written in cycle form; covers carry labels
1..n-1, and one move up either attaches a new two-cycle or conjugates an
existing one outward.
"""

from weakorder import (
    Involution,
    bottom_element,
    build_poset,
    count_maximal_chains,
    maximal_chains,
    rank_involution,
    rs_step_involution,
    verify_graded,
)

P = build_poset("involution", 4)
print(f"involutions of S_4: {len(P)} elements, {len(P.edges)} Hasse edges")
print()

by_rank: dict[int, list[str]] = {}
for x, r in zip(P.elements, P.ranks):
    by_rank.setdefault(r, []).append(x.text())
for r in sorted(by_rank):
    print(f"  rank {r}: {', '.join(by_rank[r])}")
print()

bottom = bottom_element("involution", 4)
print("monoid steps from the bottom:")
for i in range(1, 4):
    print(f"  m(s_{i}) . id = {rs_step_involution(i, bottom).text()}")
print()

# one edge carries two labels: the crossing resolves to the nesting both ways
lo = Involution.from_cycles(4, [(1, 3), (2, 4)])
hi = Involution.from_cycles(4, [(1, 4), (2, 3)])
edge = next(e for e in P.edges if (e.lo, e.hi) == (P.index_of(lo), P.index_of(hi)))
print(f"edge {lo.text()} -> {hi.text()} has labels {edge.labels}, types "
      f"{tuple(str(t) for t in edge.types)}")
print()

top = hi
print(f"top element {top.text()} at rank {rank_involution(top)}")
print(f"maximal chains from bottom to top: {count_maximal_chains(P, top)}")
for chain in maximal_chains(P, top):
    path = " -> ".join(x.text() for x in chain.elements)
    print(f"  labels {chain.labels}: {path}")
print()

report = verify_graded(P)
print(f"graded check: ok={report.ok} over {report.n_elements} elements")

"""Weak order posets as explicit labeled Hasse diagrams.

Each family's poset is built once, by breadth-first closure from the bottom
element under the family's cover moves.  Elements are deduplicated and sorted
by (rank, text), so indices are stable and rank-monotone: every edge points
from a lower index to a strictly higher one, and dynamic programs can sweep
the element list in order.

Edges are merged per element pair: an edge carries the sorted tuple of all
labels i realizing the cover, with the per-label cover types kept parallel.
A maximal chain resolves every step to a single label, so a multi-label edge
widens the set of chains without widening the Hasse diagram.

Ranks are recorded at build time as breadth-first depth; ``verify_graded``
cross-checks them against the closed-form rank of every element, which is
itself a statement worth testing rather than an implementation detail.

>>> P = build_poset("involution", 4)
>>> len(P.elements), len(P.edges)
(10, 14)
>>> count_maximal_chains(P, P.elements[-1])
8
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .involutions import (
    Clan,
    FpfInvolution,
    Involution,
    bottom_element,
    clan_count,
    fpf_count,
    involution_count,
    rank_clan,
    rank_fpf,
    rank_involution,
)
from .matchings import (
    CoverType,
    clan_of,
    fpf_of,
    involution_of,
    matching_of,
    signed_matching_of,
    upward_covers_clan,
    upward_covers_fpf,
    upward_covers_involution,
)

__all__ = [
    "Element",
    "Edge",
    "LabeledChain",
    "WeakOrderPoset",
    "GradedReport",
    "FAMILIES",
    "build_poset",
    "lower_interval",
    "maximal_chains",
    "count_maximal_chains",
    "verify_graded",
    "drop_cover_types",
]

Element = Union[Involution, FpfInvolution, Clan]

FAMILIES = ("involution", "fpf", "clan")


def _covers(family: str, x: Element) -> list[tuple[int, Element, CoverType]]:
    if family == "involution":
        m = matching_of(x)
        return [(i, involution_of(m2), t) for i, m2, t in upward_covers_involution(m)]
    if family == "fpf":
        m = matching_of(x)
        return [(i, fpf_of(m2), t) for i, m2, t in upward_covers_fpf(m)]
    sm = signed_matching_of(x)
    return [(i, clan_of(sm2), t) for i, sm2, t in upward_covers_clan(sm)]


def _rank(family: str, x: Element) -> int:
    if family == "involution":
        return rank_involution(x)
    if family == "fpf":
        return rank_fpf(x)
    return rank_clan(x)


def _family_count(family: str, param: "int | tuple[int, int]") -> int:
    if family == "involution":
        return involution_count(param)
    if family == "fpf":
        return fpf_count(param)
    p, q = param
    return clan_count(p, q)


@dataclass(frozen=True)
class Edge:
    """A Hasse cover lo -> hi with every label realizing it, types parallel."""

    lo: int
    hi: int
    labels: tuple[int, ...]
    types: tuple[CoverType, ...]


@dataclass(frozen=True)
class LabeledChain:
    """A label-resolved saturated chain x_0 < x_1 < ... < x_l from the bottom.

    ``elements`` has one more entry than ``labels``; labels[t] is the letter
    of the step elements[t] -> elements[t+1].
    """

    elements: tuple[Element, ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) != len(self.labels) + 1:
            raise ValueError(
                f"{len(self.elements)} elements need {len(self.elements) - 1} "
                f"labels, got {len(self.labels)}"
            )

    def __len__(self) -> int:
        return len(self.labels)


class WeakOrderPoset:
    """Immutable labeled Hasse diagram of one weak order, or a piece of one.

    ``elements`` is sorted by (rank, text); ``up[j]`` and ``down[j]`` hold
    indices into ``edges`` of the covers leaving and entering element j.
    ``complete`` records whether this is a full family poset, so that global
    checks such as the closed-form element count apply, or a derived piece
    (a lower interval or an edge-filtered copy).
    """

    def __init__(
        self,
        family: str,
        param: "int | tuple[int, int]",
        elements: tuple[Element, ...],
        ranks: tuple[int, ...],
        edges: tuple[Edge, ...],
        complete: bool,
    ) -> None:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
        self.family = family
        self.param = param
        self.elements = elements
        self.ranks = ranks
        self.edges = edges
        self.complete = complete
        self._index: dict[Element, int] = {e: j for j, e in enumerate(elements)}
        up: list[list[int]] = [[] for _ in elements]
        down: list[list[int]] = [[] for _ in elements]
        for k, e in enumerate(edges):
            up[e.lo].append(k)
            down[e.hi].append(k)
        self.up: tuple[tuple[int, ...], ...] = tuple(map(tuple, up))
        self.down: tuple[tuple[int, ...], ...] = tuple(map(tuple, down))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index_of(self, x: Element) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"element {x} is not in this poset") from None

    def rank_of(self, x: Element) -> int:
        return self.ranks[self.index_of(x)]

    @property
    def bottom(self) -> Element:
        return self.elements[0]

    def maximal_elements(self) -> tuple[Element, ...]:
        return tuple(e for j, e in enumerate(self.elements) if not self.up[j])


def build_poset(family: str, param: "int | tuple[int, int]") -> WeakOrderPoset:
    """Breadth-first closure from the bottom element under upward covers.

    >>> build_poset("fpf", 6).maximal_elements()[0].text()
    '(1,6)(2,5)(3,4)'
    >>> len(build_poset("clan", (2, 2)).maximal_elements())
    6
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    bottom = bottom_element(family, param)
    depth: dict[Element, int] = {bottom: 0}
    edge_labels: dict[tuple[Element, Element], dict[int, CoverType]] = {}
    frontier: list[Element] = [bottom]
    d = 0
    while frontier:
        d += 1
        nxt: list[Element] = []
        for x in frontier:
            for i, y, kind in _covers(family, x):
                edge_labels.setdefault((x, y), {})[i] = kind
                if y not in depth:
                    depth[y] = d
                    nxt.append(y)
        frontier = nxt
    elements = tuple(sorted(depth, key=lambda e: (depth[e], e.text())))
    index = {e: j for j, e in enumerate(elements)}
    ranks = tuple(depth[e] for e in elements)
    edges = []
    for (x, y), found in edge_labels.items():
        labels = tuple(sorted(found))
        types = tuple(found[i] for i in labels)
        edges.append(Edge(index[x], index[y], labels, types))
    edges.sort(key=lambda e: (e.lo, e.hi))
    return WeakOrderPoset(family, param, elements, ranks, tuple(edges), complete=True)


def _down_set(P: WeakOrderPoset, target: int) -> set[int]:
    seen = {target}
    stack = [target]
    while stack:
        j = stack.pop()
        for k in P.down[j]:
            lo = P.edges[k].lo
            if lo not in seen:
                seen.add(lo)
                stack.append(lo)
    return seen


def lower_interval(P: WeakOrderPoset, x: Element) -> WeakOrderPoset:
    """Induced subposet on everything below or equal to x; labels kept."""
    keep = _down_set(P, P.index_of(x))
    order = sorted(keep)
    remap = {old: new for new, old in enumerate(order)}
    elements = tuple(P.elements[j] for j in order)
    ranks = tuple(P.ranks[j] for j in order)
    edges = tuple(
        Edge(remap[e.lo], remap[e.hi], e.labels, e.types)
        for e in P.edges
        if e.lo in keep and e.hi in keep
    )
    return WeakOrderPoset(P.family, P.param, elements, ranks, edges, complete=False)


def maximal_chains(P: WeakOrderPoset, x: Element) -> Iterator[LabeledChain]:
    """All label-resolved maximal chains of [bottom, x], lazily, in a fixed order.

    Depth-first with an explicit stack; an edge with several labels yields one
    chain per label.  By gradedness every chain has exactly rank(x) steps.

    >>> P = build_poset("involution", 3)
    >>> top = P.elements[-1]
    >>> [c.labels for c in maximal_chains(P, top)]
    [(1, 2), (2, 1)]
    """
    target = P.index_of(x)
    keep = _down_set(P, target)
    start = P.index_of(P.bottom)
    if start not in keep:
        return
    if target == start:
        yield LabeledChain((P.elements[start],), ())
        return

    moves: dict[int, list[tuple[int, int]]] = {}

    def moves_at(j: int) -> list[tuple[int, int]]:
        got = moves.get(j)
        if got is None:
            got = sorted(
                (P.edges[k].hi, lab)
                for k in P.up[j]
                if P.edges[k].hi in keep
                for lab in P.edges[k].labels
            )
            moves[j] = got
        return got

    # frame: [element index, label taken into it, outgoing moves, cursor]
    stack: list[list] = [[start, 0, moves_at(start), 0]]
    while stack:
        frame = stack[-1]
        mv, cur = frame[2], frame[3]
        if cur == len(mv):
            stack.pop()
            continue
        frame[3] += 1
        hi, lab = mv[cur]
        if hi == target:
            elems = tuple(P.elements[f[0]] for f in stack) + (P.elements[hi],)
            labels = tuple(f[1] for f in stack[1:]) + (lab,)
            yield LabeledChain(elems, labels)
        else:
            stack.append([hi, lab, moves_at(hi), 0])


def count_maximal_chains(P: WeakOrderPoset, x: Element) -> int:
    """Chain count of [bottom, x] by dynamic programming over the DAG.

    Agrees with exhausting ``maximal_chains`` but never materializes chains;
    counts grow factorially with rank.
    """
    target = P.index_of(x)
    keep = _down_set(P, target)
    start = P.index_of(P.bottom)
    if start not in keep:
        return 0
    counts = {j: 0 for j in keep}
    counts[start] = 1
    # ascending index order is a topological order: ranks only increase
    for j in sorted(keep):
        c = counts[j]
        if c == 0:
            continue
        for k in P.up[j]:
            e = P.edges[k]
            if e.hi in keep:
                counts[e.hi] += c * len(e.labels)
    return counts[target]


@dataclass(frozen=True)
class GradedReport:
    """Findings of verify_graded; empty violations means all checks passed."""

    family: str
    param: "int | tuple[int, int]"
    n_elements: int
    n_edges: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_graded(P: WeakOrderPoset) -> GradedReport:
    """Check gradedness and rank bookkeeping; reports findings, never raises.

    Verifies that the stored breadth-first depth equals the closed-form rank
    of every element, that every edge raises rank by exactly 1, that the
    bottom is the unique minimum at rank 0, and, for complete posets, that
    the element count matches the closed-form family count.
    """
    bad: list[str] = []
    for j, e in enumerate(P.elements):
        want = _rank(P.family, e)
        if P.ranks[j] != want:
            bad.append(
                f"rank of {e.text()}: stored {P.ranks[j]}, formula gives {want}"
            )
    for e in P.edges:
        if P.ranks[e.hi] != P.ranks[e.lo] + 1:
            bad.append(
                f"edge {P.elements[e.lo].text()} -> {P.elements[e.hi].text()} "
                f"jumps rank {P.ranks[e.lo]} -> {P.ranks[e.hi]}"
            )
    minima = [j for j in range(len(P.elements)) if not P.down[j]]
    if len(minima) != 1:
        bad.append(f"{len(minima)} minimal elements, expected a unique bottom")
    elif P.ranks[minima[0]] != 0:
        bad.append(
            f"bottom {P.elements[minima[0]].text()} has rank "
            f"{P.ranks[minima[0]]}, expected 0"
        )
    if P.complete:
        want = _family_count(P.family, P.param)
        if len(P.elements) != want:
            bad.append(f"{len(P.elements)} elements, closed form gives {want}")
    return GradedReport(P.family, P.param, len(P.elements), len(P.edges), tuple(bad))


def drop_cover_types(P: WeakOrderPoset, kinds: Iterable[CoverType]) -> WeakOrderPoset:
    """Copy of P with every cover label of the given types removed.

    Edges left with no labels disappear; elements are all kept, so the result
    may be disconnected.  Used to test which cover types already generate the
    order on their own.
    """
    drop = frozenset(kinds)
    edges = []
    for e in P.edges:
        kept = [(lab, t) for lab, t in zip(e.labels, e.types) if t not in drop]
        if kept:
            edges.append(
                Edge(e.lo, e.hi, tuple(l for l, _ in kept), tuple(t for _, t in kept))
            )
    return WeakOrderPoset(
        P.family, P.param, P.elements, P.ranks, tuple(edges), complete=False
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()

"""W-sets: the permutations carried by the maximal chains below an element.

Every maximal chain from the bottom element to x spells a word: reading its
labels j_1, ..., j_l from the bottom up, the chain's permutation is the
product s_{j_l} ... s_{j_1} (first label applied first).  The W-set of x
collects these products; by gradedness each has length exactly rank(x), and
the chains below x are exactly the reduced words of the W-set members.

Each family also admits a direct construction that never touches the poset:

- involutions: all words passing five positional conditions on where the
  cycle values (b_i before a_i, consecutively up to nesting) and the fixed
  points (increasing, outside every cycle span) may sit;
- fixed-point-free involutions: all concatenations of the two-element blocks
  [a_i, b_i] in any order that keeps block i before block j whenever both
  a_i < a_j and b_i < b_j;
- clans: all outcomes of the peeling procedure that repeatedly sends a
  non-nested strand to the outer free slots (small end left) or an adjacent
  opposite-sign pair of isolated vertices to the outer free slots (large end
  left), until only same-sign isolated vertices remain in the middle.

``wset_oracle`` computes the same sets by brute force over labeled chains;
the test suite certifies that each direct construction agrees with it.

>>> pi = Involution.from_cycles(4, [(1, 4), (2, 3)])
>>> [w.as_text(compact=True) for w in wset_involution(pi).members]
['3241', '3412', '4132']
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .involutions import (
    Clan,
    FpfInvolution,
    Involution,
    rank_clan,
    rank_fpf,
    rank_involution,
)
from .matchings import Matching
from .permutations import (
    Permutation,
    apply_simple_left,
    count_reduced_words,
    identity,
    length,
)
from .posets import Element, WeakOrderPoset, count_maximal_chains

__all__ = [
    "WSet",
    "check_conditions_involution",
    "check_conditions_matching",
    "wset_involution",
    "wset_fpf",
    "wset_clan",
    "wset_direct",
    "wstar",
    "wset_oracle",
    "chain_count_identity",
]


@dataclass(frozen=True)
class WSet:
    """The W-set of one element: members sorted by one-line word.

    Every member has length equal to the element's rank; that equality is
    what makes the chains below the element exactly the reduced words of
    the members.
    """

    element: Element
    rank: int
    members: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        for w in self.members:
            if length(w) != self.rank:
                raise ValueError(
                    f"member {w} has length {length(w)}, expected the rank {self.rank}"
                )
        words = [w.word for w in self.members]
        if sorted(set(words)) != words:
            raise ValueError("members must be duplicate-free and sorted by word")

    def __len__(self) -> int:
        return len(self.members)


def _collect(element: Element, rank: int, words: Iterable[Permutation]) -> WSet:
    members = tuple(sorted(set(words), key=lambda w: w.word))
    return WSet(element, rank, members)


def check_conditions_involution(w: Permutation, pi: Involution) -> bool:
    """The five positional conditions characterizing membership in a W-set.

    With pi = (a_1,b_1)...(a_k,b_k) in standard form and fixed points
    c_1 < ... < c_l, a word w passes iff

    1. each b_i occurs before a_i, and no value strictly between a_i and b_i
       occurs between them;
    2. for cycles i < j with b_i < b_j, a_i occurs before b_j;
    3. fixed points occur in increasing order;
    4. a fixed point below a_i occurs before b_i;
    5. a fixed point above b_i occurs after a_i.

    The filter says nothing about length; membership additionally requires
    length(w) to equal the rank, which callers enforce.

    >>> pi = Involution.from_cycles(4, [(1, 4), (2, 3)])
    >>> check_conditions_involution(Permutation((3, 4, 1, 2)), pi)
    True
    >>> check_conditions_involution(Permutation((4, 3, 2, 1)), pi)
    False
    """
    if w.n != pi.n:
        raise ValueError(f"size mismatch: permutation on {w.n}, involution on {pi.n}")
    pos = {v: s for s, v in enumerate(w.word)}
    for a, b in pi.cycles:
        pa, pb = pos[a], pos[b]
        if not pb < pa:
            return False
        for x in range(a + 1, b):
            if pb < pos[x] < pa:
                return False
    for (a1, b1), (a2, b2) in itertools.combinations(pi.cycles, 2):
        # standard form sorts cycles by first entry, so a1 < a2 here
        if b1 < b2 and not pos[a1] < pos[b2]:
            return False
    for c1, c2 in itertools.combinations(pi.fixed_points, 2):
        if not pos[c1] < pos[c2]:
            return False
    for a, b in pi.cycles:
        for c in pi.fixed_points:
            if c < a and not pos[c] < pos[b]:
                return False
            if b < c and not pos[a] < pos[c]:
                return False
    return True


def check_conditions_matching(w: Permutation, m: Matching) -> bool:
    """The same filter, restated on the matching picture.

    Strands play the cycles and isolated vertices the fixed points; the two
    phrasings agree on every input, which the test suite checks directly.
    """
    if w.n != m.n:
        raise ValueError(f"size mismatch: permutation on {w.n}, matching on {m.n}")
    pos = {v: s for s, v in enumerate(w.word)}
    for i, j in m.strands:
        pi_, pj = pos[i], pos[j]
        if not pj < pi_:
            return False
        for k in range(i + 1, j):
            if pj < pos[k] < pi_:
                return False
    for (i, j), (k, l) in itertools.combinations(m.strands, 2):
        # sorted strands give i < k; j < l makes the pair non-nesting
        if j < l and not pos[i] < pos[l]:
            return False
    for i, j in itertools.combinations(m.isolated, 2):
        if not pos[i] < pos[j]:
            return False
    for i, j in m.strands:
        for k in m.isolated:
            if k < i and not pos[k] < pos[j]:
                return False
            if j < k and not pos[i] < pos[k]:
                return False
    return True


def wset_involution(pi: Involution) -> WSet:
    """Direct W-set of an involution, by placement backtracking.

    The values (b_t, a_t) are placed cycle by cycle into two consecutive
    free slots, b_t on the left; a placement that already breaks condition
    (1) or (2) is abandoned.  Fixed points then fill the remaining slots in
    increasing order and the full five-condition filter has the last word.

    >>> pi = Involution.from_cycles(5, [(1, 3), (2, 5)])
    >>> [w.as_text(compact=True) for w in wset_involution(pi).members]
    ['31452', '31524']
    """
    n = pi.n
    cycles = pi.cycles
    word = [0] * n
    pos: dict[int, int] = {}
    results: set[Permutation] = set()

    def fits(t: int, pb: int, pa: int) -> bool:
        a, b = cycles[t]
        for s in range(pb + 1, pa):
            # slots between two consecutive free slots are all occupied
            if a < word[s] < b:
                return False
        for a0, b0 in cycles[:t]:
            pb0, pa0 = pos[b0], pos[a0]
            if a0 < b < b0 and pb0 < pb < pa0:
                return False
            if a0 < a < b0 and pb0 < pa < pa0:
                return False
            if b0 < b and not pos[a0] < pb:
                return False
        return True

    def place(t: int) -> None:
        if t == len(cycles):
            free = [s for s in range(n) if not word[s]]
            for s, c in zip(free, pi.fixed_points):
                word[s] = c
            cand = Permutation(tuple(word))
            if check_conditions_involution(cand, pi):
                results.add(cand)
            for s in free:
                word[s] = 0
            return
        a, b = cycles[t]
        free = [s for s in range(n) if not word[s]]
        for u in range(len(free) - 1):
            pb, pa = free[u], free[u + 1]
            if not fits(t, pb, pa):
                continue
            word[pb], word[pa] = b, a
            pos[b], pos[a] = pb, pa
            place(t + 1)
            word[pb], word[pa] = 0, 0
            del pos[b], pos[a]

    place(0)
    return _collect(pi, rank_involution(pi), results)


def wset_fpf(pi: FpfInvolution) -> WSet:
    """Direct W-set in the fixed-point-free order, by block orderings.

    Members are exactly the concatenations of the two-element blocks
    [a_t, b_t] in which block t stays before block u whenever a_t < a_u
    and b_t < b_u; the backtracking below emits each linear extension of
    that precedence once.

    >>> pi = FpfInvolution.from_cycles(4, [(1, 4), (2, 3)])
    >>> [w.as_text(compact=True) for w in wset_fpf(pi).members]
    ['1423', '2314']
    """
    blocks = pi.cycles
    k = len(blocks)
    results: set[Permutation] = set()
    used = [False] * k
    order: list[int] = []

    def extend() -> None:
        if len(order) == k:
            results.add(Permutation(tuple(v for t in order for v in blocks[t])))
            return
        for t in range(k):
            if used[t]:
                continue
            # blocks are sorted by a, so only earlier blocks can be forced first
            if any(not used[u] and blocks[u][1] < blocks[t][1] for u in range(t)):
                continue
            used[t] = True
            order.append(t)
            extend()
            order.pop()
            used[t] = False

    extend()
    return _collect(pi, rank_fpf(pi), results)


def wstar(n: int) -> Permutation:
    """[2,1,4,3,...,n,n-1], the W-set of the bottom fixed-point-free element.

    Composing on the right with it carries the fixed-point-free W-set of an
    element into its W-set among all involutions, adding n/2 to the length.

    >>> wstar(4).word
    (2, 1, 4, 3)
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    word: list[int] = []
    for i in range(1, n, 2):
        word += [i + 1, i]
    return Permutation(tuple(word))


def wset_clan(pi: Clan) -> WSet:
    """Direct W-set of a clan, by the outside-in peeling procedure.

    A holds the vertices not yet written.  Each step writes one value into
    the leftmost and one into the rightmost free slot: either a strand with
    both endpoints in A and nested inside no strand with both endpoints in
    A (small endpoint left), or two isolated vertices of opposite sign,
    adjacent in A and likewise nested in no such strand (large one left).
    When A holds only same-sign isolated vertices they fill the middle in
    increasing order.  Distinct choice sequences can repeat a word; the
    result is deduplicated.  Completions depend only on A, so they are
    memoized per remaining-vertex set.

    >>> c = Clan.from_parts(4, [], {1: 1, 2: -1, 3: 1, 4: 1})
    >>> [w.as_text(compact=True) for w in wset_clan(c).members]
    ['2341', '3142']
    """
    sign = dict(pi.signed_fixed_points)
    strands = pi.cycles
    memo: dict[frozenset[int], set[tuple[int, ...]]] = {}

    def completions(A: frozenset[int]) -> set[tuple[int, ...]]:
        got = memo.get(A)
        if got is not None:
            return got
        live = [(a, b) for a, b in strands if a in A and b in A]

        def nested(x: int, y: int) -> bool:
            return any(c < x and y < d for c, d in live)

        out: set[tuple[int, ...]] = set()
        if not live and len({sign[v] for v in A}) <= 1:
            out.add(tuple(sorted(A)))
            memo[A] = out
            return out
        choices: list[tuple[int, int]] = []
        for a, b in live:
            if not nested(a, b):
                choices.append((a, b))
        ordered = sorted(A)
        for x, y in zip(ordered, ordered[1:]):
            if x in sign and y in sign and sign[x] != sign[y] and not nested(x, y):
                choices.append((y, x))
        for left, right in choices:
            for mid in completions(A - {left, right}):
                out.add((left,) + mid + (right,))
        memo[A] = out
        return out

    words = completions(frozenset(range(1, pi.n + 1)))
    return _collect(pi, rank_clan(pi), (Permutation(t) for t in words))


def wset_direct(family: str, x: Element) -> WSet:
    """Dispatch to the family's direct (poset-free) W-set construction.

    The element type must match the family exactly: the same two-cycles get
    different W-sets in different families, so a silent cross-family call
    would return a wrong answer rather than fail.
    """
    if family == "involution":
        if type(x) is not Involution:
            raise ValueError(
                f"family 'involution' needs a plain Involution, got {type(x).__name__}"
            )
        return wset_involution(x)
    if family == "fpf":
        if not isinstance(x, FpfInvolution):
            raise ValueError(f"family 'fpf' needs an FpfInvolution, got {type(x).__name__}")
        return wset_fpf(x)
    if family == "clan":
        if not isinstance(x, Clan):
            raise ValueError(f"family 'clan' needs a Clan, got {type(x).__name__}")
        return wset_clan(x)
    raise ValueError(f"unknown family {family!r}")


def _chain_products(P: WeakOrderPoset) -> "list[set[Permutation]]":
    """Chain products for every element of P at once, cached on the poset.

    One upward sweep in index order (a topological order): the products of
    an element extend those of each lower neighbor by one letter per label.
    """
    cached = getattr(P, "_wset_oracle_products", None)
    if cached is not None:
        return cached
    n = P.bottom.n
    products: list[set[Permutation]] = [set() for _ in P.elements]
    products[P.index_of(P.bottom)] = {identity(n)}
    for j in range(len(P.elements)):
        got = products[j]
        if not got:
            continue
        for k in P.up[j]:
            e = P.edges[k]
            target = products[e.hi]
            for i in e.labels:
                for w in got:
                    target.add(apply_simple_left(i, w))
    P._wset_oracle_products = products
    return products


def wset_oracle(P: WeakOrderPoset, x: Element) -> WSet:
    """Brute-force W-set of x: all products over labeled maximal chains.

    Certifies the direct constructions; every product comes out at length
    rank(x) (checked), so no length filtering happens.
    """
    j = P.index_of(x)
    members = _chain_products(P)[j]
    rank = P.ranks[j]
    for w in members:
        assert length(w) == rank, f"chain product {w} misses rank {rank}"
    return _collect(x, rank, members)


def chain_count_identity(P: WeakOrderPoset, x: Element) -> tuple[int, int, bool]:
    """Count the maximal chains below x two independent ways.

    Left: dynamic program over the Hasse diagram.  Right: total number of
    reduced words over the direct W-set, which never sees the poset.  The
    two agree exactly when the chains are parameterized by those reduced
    words.
    """
    chains = count_maximal_chains(P, x)
    direct = wset_direct(P.family, x)
    words = sum(count_reduced_words(w) for w in direct.members)
    return chains, words, chains == words


if __name__ == "__main__":
    import doctest

    doctest.testmod()

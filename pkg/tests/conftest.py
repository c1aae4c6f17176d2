"""Shared brute-force enumerators, kept independent of the package internals.

Everything here works by exhaustion over one-line words, so the fast
constructions in the package can be checked against an implementation that
shares no code with them.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from weakorder import Clan, FpfInvolution, Involution, Permutation


@st.composite
def involution_strategy(draw, max_n: int = 7) -> Involution:
    n = draw(st.integers(min_value=1, max_value=max_n))
    free = list(range(1, n + 1))
    cycles = []
    while len(free) >= 2 and draw(st.booleans()):
        a = free.pop(draw(st.integers(min_value=0, max_value=len(free) - 1)))
        b = free.pop(draw(st.integers(min_value=0, max_value=len(free) - 1)))
        cycles.append((a, b))
    return Involution.from_cycles(n, cycles)


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


def brute_inversions(word: tuple[int, ...]) -> int:
    k = len(word)
    return sum(1 for i in range(k) for j in range(i + 1, k) if word[i] > word[j])


def brute_involutions(n: int) -> list[Involution]:
    """All self-inverse one-line words of size n, as Involution objects."""
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        if all(w[w[i - 1] - 1] == i for i in range(1, n + 1)):
            cycles = [(i, w[i - 1]) for i in range(1, n + 1) if w[i - 1] > i]
            out.append(Involution.from_cycles(n, cycles))
    return out


def brute_fpf(n: int) -> list[FpfInvolution]:
    return [
        FpfInvolution.from_cycles(pi.n, pi.cycles)
        for pi in brute_involutions(n)
        if not pi.fixed_points
    ]


def brute_clans(p: int, q: int) -> list[Clan]:
    """All involutions of size p+q with signed fixed points of charge p-q."""
    n = p + q
    out = []
    for pi in brute_involutions(n):
        plus_needed = p - pi.num_cycles
        if not 0 <= plus_needed <= len(pi.fixed_points):
            continue
        for plus in itertools.combinations(pi.fixed_points, plus_needed):
            signs = {v: (1 if v in plus else -1) for v in pi.fixed_points}
            out.append(Clan.from_parts(n, pi.cycles, signs))
    return out


def words_from_digits(*texts: str) -> set[Permutation]:
    return {Permutation.from_text(t) for t in texts}

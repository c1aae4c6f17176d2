"""Involutions, fixed-point-free involutions, and clans.

An involution is stored in standard form: two-cycles (a_i, b_i) with
a_i < b_i, sorted by a_i, plus the sorted tuple of fixed points.  A clan is
an involution whose fixed points each carry a sign (+1 or -1); the signature
(p, q) is read off as p = #{+} + #cycles and q = #{-} + #cycles.

The weak order on each of the three families is generated by the monoid step
``rs_step_involution`` / ``rs_step_fpf`` (for clans the covers are produced
directly from local matching surgeries, see the matchings module).  Each step
either fixes the element or raises its rank by exactly 1.

>>> pi = standard_form(Permutation((3, 4, 1, 2)))
>>> pi.cycles
((1, 3), (2, 4))
>>> rank_involution(pi)
3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .permutations import Permutation, compose, identity, length, some_reduced_word

__all__ = [
    "Involution",
    "FpfInvolution",
    "Clan",
    "standard_form",
    "rank_involution",
    "rank_fpf",
    "rank_clan",
    "rs_step_involution",
    "rs_step_fpf",
    "rs_word_action",
    "bottom_involution",
    "bottom_fpf",
    "bottom_clan",
    "bottom_element",
    "maximal_clans",
    "involution_count",
    "fpf_count",
    "clan_count",
]


@dataclass(frozen=True)
class Involution:
    """An involution of {1, ..., n} in standard form."""

    n: int
    cycles: tuple[tuple[int, int], ...]
    fixed_points: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        seen = list(self.fixed_points)
        for a, b in self.cycles:
            if not a < b:
                raise ValueError(f"cycle ({a},{b}) not in standard form: need a < b")
            seen.extend((a, b))
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(
                f"cycles {self.cycles} and fixed points {self.fixed_points} "
                f"do not partition 1..{self.n}"
            )
        firsts = [a for a, _ in self.cycles]
        if firsts != sorted(firsts):
            raise ValueError(f"cycles {self.cycles} not sorted by first entry")
        if list(self.fixed_points) != sorted(self.fixed_points):
            raise ValueError(f"fixed points {self.fixed_points} not sorted")

    @classmethod
    def from_cycles(
        cls, n: int, cycles: "tuple[tuple[int, int], ...] | list[tuple[int, int]]"
    ) -> "Involution":
        """Build from unordered two-cycles; fixed points are the rest of 1..n."""
        cyc = tuple(sorted(tuple(sorted(ab)) for ab in cycles))
        used = {v for ab in cyc for v in ab}
        if len(used) != 2 * len(cyc):
            raise ValueError(f"cycles {cycles} reuse a vertex")
        fixed = tuple(v for v in range(1, n + 1) if v not in used)
        return cls(n, cyc, fixed)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def as_permutation(self) -> Permutation:
        word = list(range(1, self.n + 1))
        for a, b in self.cycles:
            word[a - 1], word[b - 1] = b, a
        return Permutation(tuple(word))

    def image(self, i: int) -> int:
        for a, b in self.cycles:
            if i == a:
                return b
            if i == b:
                return a
        return i

    def text(self) -> str:
        """Cycle notation with fixed points implicit; "id" when there are none."""
        if not self.cycles:
            return "id"
        return "".join(f"({a},{b})" for a, b in self.cycles)

    def __str__(self) -> str:
        return self.text()


class FpfInvolution(Involution):
    """An involution without fixed points; n must be even."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.fixed_points:
            raise ValueError(
                f"fixed points {self.fixed_points} present; expected none"
            )
        if self.n % 2:
            raise ValueError(f"n must be even for fixed-point-free involutions, got {self.n}")

    @classmethod
    def from_cycles(
        cls, n: int, cycles: "tuple[tuple[int, int], ...] | list[tuple[int, int]]"
    ) -> "FpfInvolution":
        base = Involution.from_cycles(n, cycles)
        return cls(n, base.cycles, base.fixed_points)

    def as_involution(self) -> Involution:
        """The same element viewed in the poset of all involutions."""
        return Involution(self.n, self.cycles, self.fixed_points)


@dataclass(frozen=True)
class Clan:
    """An involution whose fixed points carry signs; p, q >= 1 is required.

    ``signed_fixed_points`` holds (vertex, sign) pairs sorted by vertex, with
    sign +1 or -1.
    """

    n: int
    cycles: tuple[tuple[int, int], ...]
    signed_fixed_points: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        base = Involution(self.n, self.cycles, tuple(v for v, _ in self.signed_fixed_points))
        del base
        for v, s in self.signed_fixed_points:
            if s not in (1, -1):
                raise ValueError(f"sign at vertex {v} must be +1 or -1, got {s}")
        if self.p < 1 or self.q < 1:
            raise ValueError(
                f"signature ({self.p},{self.q}) invalid: both p and q must be at least 1"
            )

    @classmethod
    def from_parts(
        cls,
        n: int,
        cycles: "tuple[tuple[int, int], ...] | list[tuple[int, int]]",
        signs: "dict[int, int] | list[tuple[int, int]]",
    ) -> "Clan":
        base = Involution.from_cycles(n, cycles)
        signs = dict(signs)
        if sorted(signs) != list(base.fixed_points):
            raise ValueError(
                f"signs given for {sorted(signs)} but fixed points are {base.fixed_points}"
            )
        signed = tuple((v, signs[v]) for v in base.fixed_points)
        return cls(n, base.cycles, signed)

    @property
    def p(self) -> int:
        return len(self.cycles) + sum(1 for _, s in self.signed_fixed_points if s > 0)

    @property
    def q(self) -> int:
        return len(self.cycles) + sum(1 for _, s in self.signed_fixed_points if s < 0)

    @property
    def total_charge(self) -> int:
        return self.p - self.q

    def underlying_involution(self) -> Involution:
        return Involution(self.n, self.cycles, tuple(v for v, _ in self.signed_fixed_points))

    def text(self) -> str:
        """Cycle notation with every vertex present, signs on one-cycles."""
        parts: dict[int, str] = {a: f"({a},{b})" for a, b in self.cycles}
        for v, s in self.signed_fixed_points:
            parts[v] = f"({v}{'+' if s > 0 else '-'})"
        return "".join(parts[a] for a in sorted(parts))

    def __str__(self) -> str:
        return self.text()


def standard_form(u: Permutation) -> Involution:
    """Decompose an involutive permutation into sorted cycles and fixed points.

    >>> standard_form(Permutation((4, 3, 2, 1))).cycles
    ((1, 4), (2, 3))
    """
    for i in range(1, u.n + 1):
        if u(u(i)) != i:
            raise ValueError(f"not an involution: u(u({i})) = {u(u(i))} != {i}")
    cycles = tuple((i, u(i)) for i in range(1, u.n + 1) if u(i) > i)
    fixed = tuple(i for i in range(1, u.n + 1) if u(i) == i)
    return Involution(u.n, cycles, fixed)


def rank_involution(pi: Involution) -> int:
    """(length + number of two-cycles) / 2; the weak-order rank.

    >>> rank_involution(Involution.from_cycles(4, [(1, 4), (2, 3)]))
    4
    """
    return (length(pi.as_permutation()) + pi.num_cycles) // 2


def rank_fpf(pi: FpfInvolution) -> int:
    """Inversions of the flattened standard-form word (a_1, b_1, ..., a_k, b_k).

    Identity with the all-involutions rank: rank_fpf == rank_involution - k.

    >>> rank_fpf(FpfInvolution.from_cycles(6, [(1, 6), (2, 5), (3, 4)]))
    6
    """
    flat = [v for ab in pi.cycles for v in ab]
    return sum(
        1
        for i, j in itertools.combinations(range(len(flat)), 2)
        if flat[i] > flat[j]
    )


def rank_clan(pi: Clan) -> int:
    """p*q minus the all-involutions rank of the underlying involution.

    The clan order runs opposite to the involution order, so shortening
    moves go up and the unique bottom has rank 0.
    """
    return pi.p * pi.q - rank_involution(pi.underlying_involution())


# The monoid step, on the one-line word m of an involution (m[i-1] == pi(i)).
# Cases at (i, i+1): both fixed -> attach the two-cycle (i, i+1); the strand
# {i, i+1} itself or a descent pi(i) > pi(i+1) -> no move; otherwise conjugate
# by s_i, which is exactly the case where the length rises by 2.  The
# equivalence with the literal length comparison is covered by tests.
def _step_map(i: int, m: tuple[int, ...]) -> tuple[int, ...]:
    a, b = m[i - 1], m[i]
    if a == i and b == i + 1:
        out = list(m)
        out[i - 1], out[i] = i + 1, i
        return tuple(out)
    if a == i + 1 or a > b:
        return m
    # conjugate by s_i: swap the entries at i, i+1 and rename the values
    out = list(m)
    out[i - 1] = i if b == i + 1 else b
    out[i] = i + 1 if a == i else a
    if a != i:
        out[a - 1] = i + 1
    if b != i + 1:
        out[b - 1] = i
    return tuple(out)


def _involution_from_map(m: tuple[int, ...], family: type) -> Involution:
    n = len(m)
    cycles = tuple((i, m[i - 1]) for i in range(1, n + 1) if m[i - 1] > i)
    fixed = tuple(i for i in range(1, n + 1) if m[i - 1] == i)
    return family(n, cycles, fixed)


def _as_map(pi: Involution) -> tuple[int, ...]:
    return pi.as_permutation().word


def rs_step_involution(i: int, pi: Involution) -> Involution:
    """One monoid step at i: the unique cover of pi along label i, or pi itself.

    >>> rs_step_involution(1, standard_form(identity(4))).cycles
    ((1, 2),)
    """
    if not 1 <= i <= pi.n - 1:
        raise ValueError(f"step index {i} out of range 1..{pi.n - 1}")
    return _involution_from_map(_step_map(i, _as_map(pi)), Involution)


def rs_step_fpf(i: int, pi: FpfInvolution) -> FpfInvolution:
    """One monoid step in the fixed-point-free order (conjugation only).

    This is the restriction of the all-involutions step: with no fixed
    points available the attach branch never fires.
    """
    if not 1 <= i <= pi.n - 1:
        raise ValueError(f"step index {i} out of range 1..{pi.n - 1}")
    return _involution_from_map(_step_map(i, _as_map(pi)), FpfInvolution)


def rs_word_action(w: Permutation, pi: Involution) -> Involution:
    """Apply the steps of one reduced word of w, rightmost letter first.

    The result does not depend on which reduced word is chosen; that
    independence is what makes the action well defined, and it is exercised
    directly by the test suite.

    >>> rs_word_action(Permutation((3, 1, 2)), standard_form(identity(3))).cycles
    ((1, 3),)
    """
    if w.n != pi.n:
        raise ValueError(f"size mismatch: {w.n} vs {pi.n}")
    family = FpfInvolution if isinstance(pi, FpfInvolution) else Involution
    m = _as_map(pi)
    for i in reversed(some_reduced_word(w)):
        m = _step_map(i, m)
    return _involution_from_map(m, family)


def bottom_involution(n: int) -> Involution:
    """The identity involution, the unique rank-0 element."""
    return Involution(n, (), tuple(range(1, n + 1)))


def bottom_fpf(n: int) -> FpfInvolution:
    """(1,2)(3,4)...(n-1,n), the unique rank-0 fixed-point-free involution."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    return FpfInvolution(n, tuple((i, i + 1) for i in range(1, n, 2)), ())


def bottom_clan(p: int, q: int) -> Clan:
    """(1,n)(2,n-1)...(m,n+1-m) with the majority sign on the middle vertices.

    Here m = min(p, q); for p = q there are no signed vertices at all.

    >>> bottom_clan(2, 2).text()
    '(1,4)(2,3)'
    >>> bottom_clan(3, 1).text()
    '(1,4)(2+)(3+)'
    """
    if p < 1 or q < 1:
        raise ValueError(f"signature ({p},{q}) invalid: both p and q must be at least 1")
    n = p + q
    m = min(p, q)
    cycles = tuple((i, n + 1 - i) for i in range(1, m + 1))
    sign = 1 if p >= q else -1
    signed = tuple((v, sign) for v in range(m + 1, n - m + 1))
    return Clan(n, cycles, signed)


def bottom_element(family: str, param: "int | tuple[int, int]"):
    """Dispatch to the bottom of the named family: involution | fpf | clan."""
    if family == "involution":
        assert isinstance(param, int)
        return bottom_involution(param)
    if family == "fpf":
        assert isinstance(param, int)
        return bottom_fpf(param)
    if family == "clan":
        p, q = param  # type: ignore[misc]
        return bottom_clan(p, q)
    raise ValueError(f"unknown family {family!r}")


def maximal_clans(p: int, q: int) -> list[Clan]:
    """All clans with no two-cycles: sign words with p plusses and q minuses.

    These are exactly the maximal elements of the clan order; there are
    binomial(p+q, p) of them.  Sorted by text for determinism.
    """
    if p < 1 or q < 1:
        raise ValueError(f"signature ({p},{q}) invalid: both p and q must be at least 1")
    n = p + q
    out = []
    for plus in itertools.combinations(range(1, n + 1), p):
        signed = tuple((v, 1 if v in plus else -1) for v in range(1, n + 1))
        out.append(Clan(n, (), signed))
    return sorted(out, key=lambda c: c.text())


def _double_factorial_odd(k: int) -> int:
    # (2k-1)!! with the empty product for k = 0
    out = 1
    for v in range(1, 2 * k, 2):
        out *= v
    return out


def involution_count(n: int) -> int:
    """sum over k of C(n, 2k) * (2k-1)!!.

    >>> involution_count(6)
    76
    """
    return sum(comb(n, 2 * k) * _double_factorial_odd(k) for k in range(n // 2 + 1))


def fpf_count(n: int) -> int:
    """(n-1)!! for even n.

    >>> fpf_count(8)
    105
    """
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    return _double_factorial_odd(n // 2)


def clan_count(p: int, q: int) -> int:
    """sum over k of C(n, 2k) * (2k-1)!! * C(n-2k, p-k), n = p+q.

    >>> clan_count(2, 2)
    21
    """
    n = p + q
    return sum(
        comb(n, 2 * k) * _double_factorial_odd(k) * comb(n - 2 * k, p - k)
        for k in range(min(p, q) + 1)
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()

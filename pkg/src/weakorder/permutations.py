"""Permutations of {1, ..., n} in one-line notation.

Conventions, used consistently across the whole package:

- positions and values are 1-indexed;
- composition is right-to-left, ``compose(u, v)(i) == u(v(i))``;
- ``s_i`` denotes the simple transposition exchanging i and i+1;
- the length of a permutation is its inversion count, which equals its
  Coxeter length with respect to the generators s_1, ..., s_{n-1};
- a reduced word ``(i_1, ..., i_k)`` stands for the left-to-right product
  ``s_{i_1} o s_{i_2} o ... o s_{i_k}`` and is reduced when k equals the
  length of that product.

>>> u = Permutation((3, 2, 4, 1))
>>> u(1), u(4)
(3, 1)
>>> length(u)
4
>>> sorted(left_descents(u))
[1, 2]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

__all__ = [
    "Permutation",
    "ReducedWord",
    "identity",
    "simple_transposition",
    "longest_element",
    "compose",
    "length",
    "left_descents",
    "apply_simple_left",
    "reduced_words",
    "some_reduced_word",
    "count_reduced_words",
    "evaluate_word",
]

ReducedWord = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """An immutable permutation stored as its one-line word.

    ``word[i - 1]`` is the image of i.  Ordering (and therefore sorted
    output everywhere in the package) is lexicographic on one-line words.

    >>> Permutation((2, 1, 3)) * Permutation((1, 3, 2))
    Permutation((2, 3, 1))
    >>> Permutation.from_text("[3,2,4,1]") == Permutation.from_text("3241")
    True
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if n == 0:
            raise ValueError("empty permutation: n must be at least 1")
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")
        return self.word[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse "[3,2,4,1]" or, for n <= 9, the digit form "3241".

        >>> Permutation.from_text(" [ 3, 2 , 4, 1 ] ").word
        (3, 2, 4, 1)
        """
        s = "".join(text.split())
        if not s:
            raise ValueError("empty permutation text")
        if s.startswith("[") and s.endswith("]"):
            body = s[1:-1]
            if not body:
                raise ValueError("empty permutation text")
            try:
                word = tuple(int(part) for part in body.split(","))
            except ValueError:
                raise ValueError(f"cannot parse permutation text {text!r}") from None
            return cls(word)
        if s.isdigit():
            if len(s) > 9:
                raise ValueError("digit form is only defined for n <= 9; use [..] form")
            return cls(tuple(int(ch) for ch in s))
        raise ValueError(f"cannot parse permutation text {text!r}")

    def as_text(self, compact: bool = False) -> str:
        """Canonical "[3,2,4,1]" form; digit form when compact and n <= 9."""
        if compact and self.n <= 9:
            return "".join(str(v) for v in self.word)
        return "[" + ",".join(str(v) for v in self.word) + "]"

    def __str__(self) -> str:
        return self.as_text()

    def __repr__(self) -> str:
        return f"Permutation({self.word!r})"


def identity(n: int) -> Permutation:
    """
    >>> identity(4).word
    (1, 2, 3, 4)
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def simple_transposition(i: int, n: int) -> Permutation:
    """The generator s_i in S_n, exchanging i and i+1.

    >>> simple_transposition(2, 4).word
    (1, 3, 2, 4)
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple transposition index {i} out of range 1..{n - 1}")
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(tuple(word))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation [n, n-1, ..., 1]."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Right-to-left composition u o v.

    >>> compose(Permutation((2, 1, 3)), Permutation((1, 3, 2))).word
    (2, 3, 1)
    """
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    return Permutation(tuple(u.word[v.word[i] - 1] for i in range(u.n)))


def length(u: Permutation) -> int:
    """Number of inversions of the one-line word.

    >>> length(identity(5)), length(longest_element(4))
    (0, 6)
    """
    w = u.word
    return sum(
        1
        for i, j in itertools.combinations(range(u.n), 2)
        if w[i] > w[j]
    )


def left_descents(u: Permutation) -> set[int]:
    """All j with length(s_j o u) < length(u).

    Equivalently, all j such that j+1 occurs before j in the one-line word.

    >>> sorted(left_descents(Permutation((2, 3, 4, 1))))
    [1]
    >>> left_descents(identity(3))
    set()
    """
    pos = u.inverse().word
    return {j for j in range(1, u.n) if pos[j] < pos[j - 1]}


def apply_simple_left(i: int, u: Permutation) -> Permutation:
    """s_i o u: exchanges the values i and i+1 wherever they sit in the word.

    >>> apply_simple_left(1, Permutation((3, 1, 2))).word
    (3, 2, 1)
    """
    if not 1 <= i <= u.n - 1:
        raise ValueError(f"simple transposition index {i} out of range 1..{u.n - 1}")
    word = tuple(
        i + 1 if v == i else i if v == i + 1 else v
        for v in u.word
    )
    return Permutation(word)


def evaluate_word(letters: tuple[int, ...], n: int) -> Permutation:
    """Left-to-right product s_{i_1} o s_{i_2} o ... o s_{i_k} in S_n."""
    u = identity(n)
    for i in letters:
        u = compose(u, simple_transposition(i, n))
    return u


def reduced_words(u: Permutation) -> set[ReducedWord]:
    """All reduced words for u, found by peeling left descents.

    A word ``(j,) + rest`` is reduced for u exactly when j is a left descent
    of u and ``rest`` is reduced for s_j o u.  Results are memoized within a
    single call.

    >>> reduced_words(identity(3))
    {()}
    >>> sorted(reduced_words(Permutation((3, 2, 1))))
    [(1, 2, 1), (2, 1, 2)]
    """
    memo: dict[tuple[int, ...], frozenset[ReducedWord]] = {}

    def rec(w: Permutation) -> frozenset[ReducedWord]:
        cached = memo.get(w.word)
        if cached is not None:
            return cached
        descents = left_descents(w)
        if not descents:
            result = frozenset({()})
        else:
            result = frozenset(
                (j,) + rest
                for j in descents
                for rest in rec(apply_simple_left(j, w))
            )
        memo[w.word] = result
        return result

    return set(rec(u))


def some_reduced_word(u: Permutation) -> ReducedWord:
    """One reduced word for u, deterministically (smallest descent first)."""
    letters = []
    w = u
    descents = left_descents(w)
    while descents:
        j = min(descents)
        letters.append(j)
        w = apply_simple_left(j, w)
        descents = left_descents(w)
    return tuple(letters)


def count_reduced_words(u: Permutation) -> int:
    """Number of reduced words for u, without materializing them.

    >>> count_reduced_words(Permutation((3, 2, 1)))
    2
    """
    memo: dict[tuple[int, ...], int] = {}

    def rec(w: Permutation) -> int:
        cached = memo.get(w.word)
        if cached is not None:
            return cached
        descents = left_descents(w)
        total = 1 if not descents else sum(
            rec(apply_simple_left(j, w)) for j in descents
        )
        memo[w.word] = total
        return total

    return rec(u)


if __name__ == "__main__":
    import doctest

    doctest.testmod()

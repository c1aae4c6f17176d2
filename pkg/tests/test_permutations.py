"""Permutation arithmetic, text forms, descents, and reduced words."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_permutations, brute_inversions
from weakorder.permutations import (
    Permutation,
    apply_simple_left,
    compose,
    count_reduced_words,
    evaluate_word,
    identity,
    left_descents,
    length,
    longest_element,
    reduced_words,
    simple_transposition,
    some_reduced_word,
)


@st.composite
def perms(draw, max_n: int = 7) -> Permutation:
    n = draw(st.integers(min_value=1, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(list(range(1, n + 1))))))


class TestBasics:
    def test_identity_and_longest(self) -> None:
        assert identity(4).word == (1, 2, 3, 4)
        assert longest_element(4).word == (4, 3, 2, 1)
        assert length(identity(5)) == 0
        assert length(longest_element(5)) == 10

    def test_simple_transposition(self) -> None:
        assert simple_transposition(2, 4).word == (1, 3, 2, 4)
        with pytest.raises(ValueError):
            simple_transposition(4, 4)

    def test_call_is_one_indexed(self) -> None:
        u = Permutation((3, 1, 2))
        assert (u(1), u(2), u(3)) == (3, 1, 2)

    def test_rejects_non_permutation(self) -> None:
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))
        with pytest.raises(ValueError):
            Permutation((0, 1))

    @given(perms(), perms())
    def test_compose_convention(self, u: Permutation, v: Permutation) -> None:
        if u.n != v.n:
            return
        w = compose(u, v)
        assert all(w(i) == u(v(i)) for i in range(1, u.n + 1))
        assert w == u * v

    @given(perms())
    def test_inverse(self, u: Permutation) -> None:
        assert compose(u, u.inverse()) == identity(u.n)
        assert compose(u.inverse(), u) == identity(u.n)


class TestText:
    def test_bracket_and_digit_forms(self) -> None:
        u = Permutation((3, 2, 4, 1))
        assert Permutation.from_text("[3,2,4,1]") == u
        assert Permutation.from_text("3241") == u
        assert u.as_text() == "[3,2,4,1]"
        assert u.as_text(compact=True) == "3241"
        assert str(u) == "[3,2,4,1]"

    def test_digit_form_needs_small_n(self) -> None:
        with pytest.raises(ValueError):
            Permutation.from_text("123456789" + "1")
        wide = Permutation(tuple(range(1, 11)))
        assert wide.as_text(compact=True) == wide.as_text()

    def test_malformed_text(self) -> None:
        for bad in ["", "[1,2", "1,2,3", "[a,b]", "[1,1]"]:
            with pytest.raises(ValueError):
                Permutation.from_text(bad)

    @given(perms(max_n=9))
    def test_round_trip(self, u: Permutation) -> None:
        assert Permutation.from_text(u.as_text()) == u
        assert Permutation.from_text(u.as_text(compact=True)) == u


class TestLengthAndDescents:
    @given(perms())
    def test_length_is_inversion_count(self, u: Permutation) -> None:
        assert length(u) == brute_inversions(u.word)

    @given(perms(), st.data())
    def test_left_descent_drops_length(self, u: Permutation, data) -> None:
        if u.n < 2:
            return
        j = data.draw(st.integers(min_value=1, max_value=u.n - 1))
        dropped = length(compose(simple_transposition(j, u.n), u)) < length(u)
        assert (j in left_descents(u)) == dropped

    @given(perms(), st.data())
    def test_apply_simple_left(self, u: Permutation, data) -> None:
        if u.n < 2:
            return
        j = data.draw(st.integers(min_value=1, max_value=u.n - 1))
        moved = apply_simple_left(j, u)
        assert moved == compose(simple_transposition(j, u.n), u)
        assert abs(length(moved) - length(u)) == 1

    @given(perms())
    def test_no_descents_means_identity(self, u: Permutation) -> None:
        assert (len(left_descents(u)) == 0) == (u == identity(u.n))


class TestReducedWords:
    def test_frozen_example(self) -> None:
        u = Permutation((3, 2, 4, 1))
        assert reduced_words(u) == {(1, 2, 1, 3), (1, 2, 3, 1), (2, 1, 2, 3)}

    def test_word_evaluation_convention(self) -> None:
        # (1, 2) means s_1 o s_2: apply s_2 to the identity first, then s_1.
        assert evaluate_word((1, 2), 3).word == (2, 3, 1)
        assert evaluate_word((2, 1), 3).word == (3, 1, 2)

    @given(perms(max_n=5))
    def test_reduced_words_evaluate_back(self, u: Permutation) -> None:
        ws = reduced_words(u)
        assert len(ws) == count_reduced_words(u)
        for word in ws:
            assert len(word) == length(u)
            assert evaluate_word(word, u.n) == u

    @given(perms())
    def test_some_reduced_word(self, u: Permutation) -> None:
        word = some_reduced_word(u)
        assert len(word) == length(u)
        assert evaluate_word(word, u.n) == u

    def test_exhaustive_against_all_words(self) -> None:
        # every letter sequence of the right length that evaluates to u,
        # with every prefix product strictly increasing in length
        u = longest_element(4)
        found = set()
        for word in itertools.product((1, 2, 3), repeat=6):
            if evaluate_word(word, 4) == u and brute_reduced(word, 4):
                found.add(word)
        assert found == reduced_words(u)
        assert count_reduced_words(u) == 16

    def test_counts_without_enumeration(self) -> None:
        for u in all_permutations(5):
            assert count_reduced_words(u) == len(reduced_words(u))


def brute_reduced(word: tuple[int, ...], n: int) -> bool:
    seen = identity(n)
    for i in reversed(word):
        nxt = apply_simple_left(i, seen)
        if length(nxt) != length(seen) + 1:
            return False
        seen = nxt
    return True

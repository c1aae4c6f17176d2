"""W-sets: direct constructions, condition filters, and the chain oracle."""

from __future__ import annotations

import pytest
from hypothesis import given

from conftest import (
    all_permutations,
    brute_clans,
    brute_fpf,
    brute_involutions,
    involution_strategy,
    words_from_digits,
)
from weakorder import (
    Clan,
    FpfInvolution,
    Involution,
    Permutation,
    WSet,
    bottom_element,
    build_poset,
    chain_count_identity,
    check_conditions_involution,
    check_conditions_matching,
    matching_of,
    maximal_chains,
    rank_involution,
    wset_clan,
    wset_direct,
    wset_fpf,
    wset_involution,
    wset_oracle,
    wstar,
)
from weakorder.permutations import compose, evaluate_word, length


def inv(n: int, *cycles: tuple[int, int]) -> Involution:
    return Involution.from_cycles(n, cycles)


class TestWSetContainer:
    def test_rejects_unsorted_members(self) -> None:
        a, b = Permutation((2, 1, 3)), Permutation((1, 3, 2))
        with pytest.raises(ValueError):
            WSet(inv(3, (1, 2)), 1, (a, b))

    def test_rejects_duplicates(self) -> None:
        a = Permutation((2, 1, 3))
        with pytest.raises(ValueError):
            WSet(inv(3, (1, 2)), 1, (a, a))

    def test_rejects_wrong_length(self) -> None:
        with pytest.raises(ValueError):
            WSet(inv(3, (1, 2)), 2, (Permutation((2, 1, 3)),))


class TestKnownInvolutionSets:
    def test_size_four(self) -> None:
        got = set(wset_involution(inv(4, (1, 4), (2, 3))).members)
        assert got == words_from_digits("3241", "3412", "4132")

    def test_size_five(self) -> None:
        got = set(wset_involution(inv(5, (1, 3), (2, 5))).members)
        assert got == words_from_digits("31452", "31524")

    def test_size_eight(self) -> None:
        got = set(wset_involution(inv(8, (1, 6), (3, 7), (4, 8))).members)
        assert got == words_from_digits(
            "25617384",
            "26157384",
            "26173584",
            "26173845",
            "61257384",
            "61273584",
            "61273845",
        )


class TestKnownFpfSets:
    def test_three_nested(self) -> None:
        got = set(wset_fpf(FpfInvolution.from_cycles(6, [(1, 6), (2, 5), (3, 4)])).members)
        assert got == words_from_digits(
            "162534", "163425", "251634", "253416", "341625", "342516"
        )

    def test_two_blocks(self) -> None:
        got = set(
            wset_fpf(
                FpfInvolution.from_cycles(8, [(1, 6), (2, 3), (4, 8), (5, 7)])
            ).members
        )
        assert got == words_from_digits(
            "16234857", "23164857", "16235748", "23165748"
        )

    def test_interleaved(self) -> None:
        got = set(
            wset_fpf(
                FpfInvolution.from_cycles(8, [(1, 5), (2, 7), (3, 8), (4, 6)])
            ).members
        )
        assert got == words_from_digits("15273846", "15274638", "15462738")

    def test_smallest(self) -> None:
        got = set(wset_fpf(FpfInvolution.from_cycles(4, [(1, 4), (2, 3)])).members)
        assert got == words_from_digits("1423", "2314")


class TestKnownClanSets:
    def test_all_isolated(self) -> None:
        pi = Clan.from_parts(4, [], {1: 1, 2: -1, 3: 1, 4: 1})
        assert set(wset_clan(pi).members) == words_from_digits("2341", "3142")

    def test_mixed(self) -> None:
        pi = Clan.from_parts(7, [(1, 6), (2, 3)], {4: 1, 5: -1, 7: 1})
        assert set(wset_clan(pi).members) == words_from_digits(
            "1257436", "1274536", "1527346", "1724356"
        )

    def test_matched_only(self) -> None:
        pi = Clan.from_parts(6, [(1, 4), (2, 6), (3, 5)], {})
        assert set(wset_clan(pi).members) == words_from_digits(
            "123564", "213546", "231456"
        )

    def test_two_minus(self) -> None:
        pi = Clan.from_parts(6, [], {1: 1, 2: -1, 3: -1, 4: 1, 5: 1, 6: 1})
        assert set(wset_clan(pi).members) == words_from_digits(
            "245631", "425613", "451623"
        )


class TestConditionFilters:
    def test_frozen_checks(self) -> None:
        pi = inv(4, (1, 4), (2, 3))
        assert check_conditions_involution(Permutation((3, 4, 1, 2)), pi)
        assert not check_conditions_involution(Permutation((4, 3, 2, 1)), pi)

    def test_generator_equals_filter(self) -> None:
        for n in range(1, 7):
            perms = all_permutations(n)
            for pi in brute_involutions(n):
                r = rank_involution(pi)
                filtered = {
                    w
                    for w in perms
                    if length(w) == r and check_conditions_involution(w, pi)
                }
                assert set(wset_involution(pi).members) == filtered

    def test_matching_form_agrees(self) -> None:
        for n in range(1, 7):
            perms = all_permutations(n)
            for pi in brute_involutions(n):
                m = matching_of(pi)
                for w in perms:
                    assert check_conditions_matching(w, m) == check_conditions_involution(w, pi)

    def test_fpf_generator_equals_filter(self) -> None:
        # adjacency of each pair as (a, b), and for pairs with increasing
        # right endpoints the earlier pair sits entirely to the left
        for n in (2, 4, 6):
            perms = all_permutations(n)
            for pi in brute_fpf(n):
                blocks = pi.cycles
                filtered = set()
                for w in perms:
                    pos = {w(i): i for i in range(1, n + 1)}
                    if any(pos[b] != pos[a] + 1 for a, b in blocks):
                        continue
                    if any(
                        blocks[i][1] < blocks[j][1] and pos[blocks[i][1]] > pos[blocks[j][0]]
                        for i in range(len(blocks))
                        for j in range(i + 1, len(blocks))
                    ):
                        continue
                    filtered.add(w)
                assert set(wset_fpf(pi).members) == filtered

    @given(involution_strategy())
    def test_members_are_sound(self, pi: Involution) -> None:
        ws = wset_involution(pi)
        assert ws.rank == rank_involution(pi)
        for w in ws.members:
            assert length(w) == ws.rank
            assert check_conditions_involution(w, pi)


class TestOracleAgreement:
    def test_direct_equals_oracle_spot(self) -> None:
        for family, param in [("involution", 5), ("fpf", 6), ("clan", (2, 2))]:
            P = build_poset(family, param)
            for x in P.elements:
                assert wset_direct(family, x).members == wset_oracle(P, x).members

    def test_oracle_matches_per_chain_products(self) -> None:
        for family, param in [("involution", 4), ("clan", (1, 2))]:
            P = build_poset(family, param)
            n = param if isinstance(param, int) else sum(param)
            for x in P.elements:
                by_chain = {
                    evaluate_word(tuple(reversed(c.labels)), n)
                    for c in maximal_chains(P, x)
                }
                assert set(wset_oracle(P, x).members) == by_chain

    def test_chain_count_identity(self) -> None:
        for family, param in [("involution", 4), ("fpf", 6), ("clan", (2, 2))]:
            P = build_poset(family, param)
            for x in P.elements:
                chains, words, ok = chain_count_identity(P, x)
                assert ok
                assert chains >= len(wset_direct(family, x).members)

    def test_dispatch(self) -> None:
        pi = inv(4, (1, 2))
        assert wset_direct("involution", pi) == wset_involution(pi)
        with pytest.raises(ValueError):
            wset_direct("involution", FpfInvolution.from_cycles(4, [(1, 2), (3, 4)]))
        with pytest.raises(ValueError):
            wset_direct("poset", pi)


class TestClanSymmetry:
    def test_sign_flip_preserves_wsets(self) -> None:
        for p, q in [(1, 1), (1, 2), (2, 2), (1, 3)]:
            for pi in brute_clans(p, q):
                flipped = Clan.from_parts(
                    pi.n, pi.cycles, {v: -s for v, s in pi.signed_fixed_points}
                )
                assert (flipped.p, flipped.q) == (q, p)
                assert wset_clan(flipped).members == wset_clan(pi).members

    def test_sign_flip_is_poset_bijection(self) -> None:
        for p, q in [(1, 2), (2, 3)]:
            P = build_poset("clan", (p, q))
            Q = build_poset("clan", (q, p))
            flipped = {
                Clan.from_parts(x.n, x.cycles, {v: -s for v, s in x.signed_fixed_points})
                for x in P.elements
            }
            assert flipped == set(Q.elements)
            assert len(P.edges) == len(Q.edges)


class TestFpfEmbedding:
    def test_wstar(self) -> None:
        assert wstar(6).word == (2, 1, 4, 3, 6, 5)
        assert length(wstar(8)) == 4
        with pytest.raises(ValueError):
            wstar(5)

    def test_bottom_maps_to_wstar_alone(self) -> None:
        for n in (2, 4, 6, 8):
            alpha = bottom_element("fpf", n).as_involution()
            assert wset_involution(alpha).members == (wstar(n),)

    def test_products_land_in_the_involution_wset(self) -> None:
        for n in (2, 4, 6):
            w_star = wstar(n)
            for pi in brute_fpf(n):
                big = set(wset_involution(pi.as_involution()).members)
                prods = {compose(v, w_star) for v in wset_fpf(pi).members}
                assert len(prods) == len(wset_fpf(pi).members)
                assert prods <= big
                for v in wset_fpf(pi).members:
                    assert length(compose(v, w_star)) == length(v) + length(w_star)

    def test_inclusion_can_be_strict(self) -> None:
        pi = FpfInvolution.from_cycles(4, [(1, 4), (2, 3)])
        prods = {compose(v, wstar(4)) for v in wset_fpf(pi).members}
        big = set(wset_involution(pi.as_involution()).members)
        assert prods < big
        assert big - prods == {Permutation((3, 4, 1, 2))}

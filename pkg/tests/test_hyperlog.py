"""Tests for terms, normalisation, and the rewriting operators.

The deeper operator identities (everything "modulo shuffle products") are
checked against the symbol engine: an identity holds iff the projected
symbol of the difference vanishes at random generic specialisations.
"""

import pytest

from mplred.algebra import LinearCombination
from mplred.hyperlog import (
    DegenerateTermError,
    HTerm,
    INFINITY,
    PurePowerError,
    ZERO,
    ONE,
    apply_placement,
    hexpr,
    normalize_hexpr,
    normalize_hterm,
    operator_A,
    operator_B,
    operator_D,
    parse_point,
    permutation_reduce,
    render_hterm,
    shuffle_out_front,
    split_basepoint,
    substitute_X,
    swap_x,
    transposition_reduce,
    variables,
)
from mplred.symbolic import equals_mod_sh

A, B, C, D, E, F, G = variables("a b c d e f g")


def term(letters, lower=A, xslot=INFINITY, upper=F):
    return HTerm(lower, tuple(letters), xslot, upper)


def assert_mod_sh(lhs, rhs, name, trials=2, seed=1729):
    v = equals_mod_sh(lhs, rhs, name=name, trials=trials, seed=seed)
    assert v.ok, f"{name}: symbol residue at seeds {[r.draw_seed for r in v.results]}"


class TestPoints:
    def test_interning(self):
        assert parse_point("a") is parse_point("a")
        assert parse_point("inf") is INFINITY
        assert parse_point("0") is ZERO
        assert parse_point("1") is ONE

    def test_ordering_groups_constants_first(self):
        pts = sorted([A, INFINITY, ONE, ZERO], key=lambda p: p.sort_key())
        assert pts == [ZERO, ONE, A, INFINITY]

    def test_render_roundtrip(self):
        for s in ("0", "1", "inf", "a", "x2"):
            assert str(parse_point(s)) == s or s == "inf"


class TestNormalize:
    def test_generic_term_unchanged(self):
        t = term([B, C, D])
        assert normalize_hterm(t) == hexpr((1, t))

    def test_equal_bounds_vanish(self):
        t = HTerm(A, (B, C), INFINITY, A)
        assert normalize_hterm(t) == LinearCombination.zero()

    def test_letter_equal_to_deformation_slot_vanishes(self):
        t = HTerm(A, (B, E, C), E, F)
        assert normalize_hterm(t) == LinearCombination.zero()

    def test_vanishing_wins_over_degeneracy(self):
        # A term that is both zero (bounds equal) and degenerate (first
        # letter equals the lower bound) is zero, not an error.
        t = HTerm(A, (A, B), INFINITY, A)
        assert normalize_hterm(t) == LinearCombination.zero()

    @pytest.mark.parametrize(
        "t",
        [
            HTerm(A, (A, B, C), INFINITY, F),  # leading letter = lower bound
            HTerm(A, (B, C, F), INFINITY, F),  # trailing letter = upper bound
            HTerm(A, (B, C, D), A, F),  # deformation slot = lower bound
            HTerm(A, (B, C, D), F, F),  # deformation slot = upper bound
        ],
    )
    def test_degenerate_terms_raise(self, t):
        with pytest.raises(DegenerateTermError):
            normalize_hterm(t)

    def test_normalize_hexpr_merges(self):
        t = term([B, C, D])
        z = HTerm(A, (B, C), INFINITY, A)
        e = LinearCombination.from_items([(t, 2), (z, 5)])
        out = normalize_hexpr(e)
        assert out == hexpr((2, t))

    def test_depth_counts_letters_other_than_lower_bound(self):
        assert term([B, C, D]).depth == 3
        assert term([B, A, D]).depth == 2
        assert HTerm(A, (B, A, A), INFINITY, F).depth == 1


class TestSubstitution:
    def test_replace_positions_with_letter(self):
        t = term([B, C, D, E])
        got = substitute_X(t, {1, 3}, C)
        assert got == HTerm(A, (C, C, C, E), INFINITY, F)

    def test_positions_out_of_range(self):
        t = term([B, C, D])
        with pytest.raises(ValueError):
            substitute_X(t, {0, 2}, C)
        with pytest.raises(ValueError):
            substitute_X(t, {4}, C)

    def test_projection_requires_membership(self):
        t = term([B, C, D])
        with pytest.raises(ValueError):
            operator_A(t, 2, {1, 3})

    def test_projection_replaces_chosen_positions(self):
        t = term([B, C, D, E])
        got = operator_A(t, 3, {1, 3})
        assert got == HTerm(A, (D, C, D, E), INFINITY, F)


class TestOperatorB:
    def test_weight_three_expansion(self):
        t = term([B, C, D])
        got = operator_B(t, 2)
        want = hexpr(
            (1, HTerm(A, (C, C, D), INFINITY, F)),
            (1, HTerm(A, (B, C, C), INFINITY, F)),
            (-1, HTerm(A, (C, C, C), INFINITY, F)),
        )
        assert got == want

    def test_generic_term_count(self):
        # One summand per subset of positions containing i with >= 2
        # elements: 2**4 - 1 of them at weight five, all distinct on
        # generic letters.
        t = term([B, C, D, E, G])
        got = operator_B(t, 3)
        assert len(got) == 15

    def test_matches_deformation_swap_mod_products(self):
        t = term([B, C, D])
        want = hexpr((1, t), (1, swap_x(t, 2)))
        assert_mod_sh(operator_B(t, 2), want, "b_swaps_deformation_w3")

    def test_swap_x_involution(self):
        t = term([B, C, D])
        assert swap_x(swap_x(t, 2), 2) == t


class TestShuffleOutFront:
    def test_no_leading_run_is_normalisation(self):
        t = term([B, C, D])
        assert shuffle_out_front(t, C) == normalize_hterm(t)

    def test_all_letters_equal_raises(self):
        t = HTerm(A, (C, C, C), INFINITY, F)
        with pytest.raises(PurePowerError):
            shuffle_out_front(t, C)

    def test_single_front_letter(self):
        t = HTerm(A, (C, B, D), INFINITY, F)
        got = shuffle_out_front(t, C)
        # The lone c is interleaved behind b, into (d): two placements,
        # sign (-1)^1, and no output word starts with c.
        want = hexpr(
            (-1, HTerm(A, (B, C, D), INFINITY, F)),
            (-1, HTerm(A, (B, D, C), INFINITY, F)),
        )
        assert got == want

    def test_double_front_run_count(self):
        t = HTerm(A, (C, C, B, D, E), INFINITY, F)
        got = shuffle_out_front(t, C)
        # (c,c) interleaved into (d,e) behind the fixed first letter b:
        # six words, all with sign (+1), multiplicities folded in.
        assert sum(c for _, c in got.items()) == 6
        assert all(u.letters[0] == B for u, _ in got.items())

    def test_preserves_value_mod_products(self):
        t = HTerm(A, (C, C, B), INFINITY, F)
        assert_mod_sh(shuffle_out_front(t, C), hexpr((1, t)), "front_run_shuffle_w3")


class TestSplitBasepoint:
    def test_two_terms(self):
        t = term([B, C, D])
        got = split_basepoint(t, E)
        want = hexpr(
            (1, HTerm(E, (B, C, D), INFINITY, F)),
            (-1, HTerm(E, (B, C, D), INFINITY, A)),
        )
        assert got == want

    def test_rejects_bad_basepoint(self):
        t = term([B, C, D])
        with pytest.raises(ValueError):
            split_basepoint(t, B)  # equals the first letter
        with pytest.raises(ValueError):
            split_basepoint(t, INFINITY)  # equals the deformation slot

    def test_preserves_value_mod_products(self):
        t = term([B, C, D])
        assert_mod_sh(split_basepoint(t, E), hexpr((1, t)), "rebase_w3")


class TestOperatorD:
    def test_depth_drops_by_two(self):
        for n in (3, 4, 5):
            t = term([B, C, D, E, G][:n])
            got = operator_D(t, 2)
            assert got
            assert max(u.depth for u, _ in got.items()) <= n - 2

    def test_weight_four_structure(self):
        t = term([B, C, D, E])
        got = operator_D(t, 2)
        assert len(got) == 16
        # Each term appears once per bound of the original term, with
        # opposite signs; the heaviest coefficient is -3 / +3.
        heavy_new = HTerm(C, (D, C, C, C), INFINITY, F)
        heavy_old = HTerm(C, (D, C, C, C), INFINITY, A)
        assert got.coeff(heavy_new) == -3
        assert got.coeff(heavy_old) == 3
        uppers = {u.upper for u, _ in got.items()}
        assert uppers == {A, F}
        assert all(u.lower == C for u, _ in got.items())

    def test_matches_deformation_swap_mod_products(self):
        t = term([B, C, D])
        want = hexpr((1, t), (1, swap_x(t, 2)))
        assert_mod_sh(operator_D(t, 2), want, "d_swaps_deformation_w3")

    def test_matches_deformation_swap_weight_four(self):
        t = term([B, C, D, E])
        want = hexpr((1, t), (1, swap_x(t, 3)))
        assert_mod_sh(operator_D(t, 3), want, "d_swaps_deformation_w4")


class TestTranspositionReduce:
    def test_requires_valid_positions(self):
        t = term([B, C, D])
        with pytest.raises(ValueError):
            transposition_reduce(t, 2, 2)
        with pytest.raises(ValueError):
            transposition_reduce(t, 0, 2)
        with pytest.raises(ValueError):
            transposition_reduce(t, 2, 4)

    def test_depth_drops_by_two(self):
        t = term([B, C, D, E])
        got = transposition_reduce(t, 1, 3)
        assert max(u.depth for u, _ in got.items()) <= 2

    def test_sum_with_swapped_term_mod_products(self):
        t = term([B, C, D])
        want = hexpr((1, t), (1, term([D, C, B])))
        assert_mod_sh(transposition_reduce(t, 1, 3), want, "transposition_w3")

    def test_weight_four_case(self):
        t = term([B, C, D, E])
        want = hexpr((1, t), (1, term([B, E, D, C])))
        assert_mod_sh(
            transposition_reduce(t, 2, 4), want, "transposition_w4", trials=1
        )


class TestPermutationReduce:
    def test_identity_permutation_gives_zero(self):
        t = term([B, C, D])
        assert permutation_reduce(t, (1, 2, 3)) == LinearCombination.zero()

    def test_placement_convention(self):
        t = term([B, C, D])
        assert apply_placement(t, (2, 3, 1)) == term([D, B, C])

    def test_rejects_non_permutations(self):
        t = term([B, C, D])
        with pytest.raises(ValueError):
            apply_placement(t, (1, 1, 2))
        with pytest.raises(ValueError):
            permutation_reduce(t, (1, 2))

    @pytest.mark.parametrize("sigma", [(2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)])
    def test_matches_signed_combination_mod_products(self, sigma):
        from mplred.algebra import permutation_sign

        t = term([B, C, D])
        want = hexpr(
            (1, apply_placement(t, sigma)),
            (-permutation_sign(sigma), t),
        )
        assert_mod_sh(permutation_reduce(t, sigma), want, f"perm_w3_{sigma}", trials=1)

    def test_output_depth_bound(self):
        t = term([B, C, D, E])
        got = permutation_reduce(t, (2, 4, 1, 3))
        assert max(u.depth for u, _ in got.items()) <= 2


class TestRendering:
    def test_term_format(self):
        t = term([B, C, D])
        assert render_hterm(t) == "[a | b,c,d // inf | f]"
        assert repr(t) == render_hterm(t)

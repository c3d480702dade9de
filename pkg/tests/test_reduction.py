"""Tests for the depth-reduction strategies.

Every strategy is checked against the symbol engine: the output must
equal the input term modulo shuffle products, and must only contain
terms of depth <= n - 2.
"""

from fractions import Fraction

import pytest

from mplred.algebra import LinearCombination
from mplred.hyperlog import apply_placement, hexpr
from mplred.reduction import (
    ReductionRelation,
    coeff_c,
    efficient_plan,
    generic_term,
    grid_term,
    line_term,
    odd_plan,
    reduce_efficient,
    reduce_naive,
    reduce_odd,
    reduce_term,
)
from mplred.symbolic import equals_mod_sh


def assert_reduces(t, red, name, trials=1, seed=101):
    assert max(u.depth for u, _ in red.items()) <= t.n - 2
    v = equals_mod_sh(red, hexpr((1, t)), name=name, trials=trials, seed=seed)
    assert v.ok, f"{name} does not match its input modulo products"


class TestGridTerms:
    def test_identity_placement(self):
        t = generic_term(4)
        assert grid_term(t, 1, 2) == t
        assert line_term(t, 1) == t

    def test_placements(self):
        t = generic_term(4)
        b, c, d, e = t.letters
        assert grid_term(t, 2, 4).letters == (d, b, e, c)
        assert grid_term(t, 1, 3).letters == (b, d, c, e)
        assert line_term(t, 3).letters == (c, d, b, e)

    def test_bounds_checked(self):
        t = generic_term(4)
        with pytest.raises(ValueError):
            grid_term(t, 2, 2)
        with pytest.raises(ValueError):
            grid_term(t, 0, 3)
        with pytest.raises(ValueError):
            grid_term(t, 3, 5)
        with pytest.raises(ValueError):
            line_term(t, 5)

    def test_neighbour_swap_moves_along_grid(self):
        # Swapping positions (i-1, i) of the (i-1, j) placement gives the
        # (i, j) placement; swapping (j, j+1) of (1, j) gives (1, j+1).
        t = generic_term(5)
        for j in range(3, 6):
            for i in range(2, j):
                src = grid_term(t, i - 1, j)
                want = grid_term(t, i, j)
                got = apply_placement(
                    src,
                    tuple(
                        i if k == i - 1 else (i - 1 if k == i else k)
                        for k in range(1, 6)
                    ),
                )
                assert got == want


class TestCoefficients:
    def test_column_family(self):
        assert coeff_c(5, (2, 4), (3, 4)) == 1  # 3 - 4 odd
        assert coeff_c(5, (1, 3), (2, 3)) == 1
        assert coeff_c(5, (2, 5), (3, 5)) == 0  # 3 - 5 even
        assert coeff_c(6, (3, 6), (4, 6)) == 0

    def test_top_row_family(self):
        # (-1)^j * (n//2 - j//2)
        assert coeff_c(4, (1, 2), (1, 3)) == 1
        assert coeff_c(4, (1, 3), (1, 4)) == -1
        assert coeff_c(5, (1, 2), (1, 3)) == 1
        assert coeff_c(5, (1, 3), (1, 4)) == -1
        assert coeff_c(5, (1, 4), (1, 5)) == 0
        assert coeff_c(6, (1, 4), (1, 5)) == 1
        assert coeff_c(6, (1, 5), (1, 6)) == -1

    def test_unrelated_placements_rejected(self):
        with pytest.raises(ValueError):
            coeff_c(5, (2, 4), (2, 5))
        with pytest.raises(ValueError):
            coeff_c(5, (2, 4), (4, 4))
        with pytest.raises(ValueError):
            coeff_c(2, (1, 2), (1, 3))


class TestEfficientPlan:
    def test_weight_four_relations(self):
        got = {(r.label, r.coeff) for r in efficient_plan(4)}
        want = {
            ("R(1,3|2,3)", Fraction(-1, 2)),
            ("R(2,4|3,4)", Fraction(-1, 2)),
            ("R(1,2|1,3)", Fraction(1, 2)),
            ("R(1,3|1,4)", Fraction(-1, 2)),
        }
        assert got == want

    def test_zero_coefficients_omitted(self):
        for n in (4, 5, 6):
            for rel in efficient_plan(n):
                assert rel.coeff != 0

    def test_odd_plan_weight_five(self):
        got = [(r.label, r.grid, r.swap, r.coeff) for r in odd_plan(5)]
        want = [
            ("R(2|3)", (2,), (2, 3), Fraction(-1)),
            ("R(4|5)", (4,), (4, 5), Fraction(-1)),
        ]
        assert got == want

    def test_odd_plan_rejects_even(self):
        with pytest.raises(ValueError):
            odd_plan(4)

    def test_relation_expansion_matches_label(self):
        t = generic_term(4)
        rel = ReductionRelation("R(1,3|2,3)", (1, 3), (1, 2), Fraction(-1, 2))
        assert rel.base_term(t) == grid_term(t, 1, 3)
        assert rel.expand(t)


class TestReductions:
    def test_weight_three_all_strategies(self):
        t = generic_term(3)
        for mode, fn in [
            ("naive", reduce_naive),
            ("all_n", reduce_efficient),
            ("odd_n", reduce_odd),
        ]:
            assert_reduces(t, fn(t), f"w3_{mode}", trials=2)

    def test_weight_four(self):
        t = generic_term(4)
        assert_reduces(t, reduce_efficient(t), "w4_efficient")
        assert_reduces(t, reduce_naive(t), "w4_naive")

    def test_weight_five_odd_shortcut(self):
        t = generic_term(5)
        assert_reduces(t, reduce_odd(t), "w5_odd")

    def test_odd_rejects_even_weight(self):
        with pytest.raises(ValueError):
            reduce_odd(generic_term(4))

    def test_small_weights_rejected(self):
        with pytest.raises(ValueError):
            reduce_efficient(generic_term(2))
        with pytest.raises(ValueError):
            reduce_naive(generic_term(2))

    def test_mode_dispatch(self):
        t = generic_term(3)
        assert reduce_term(t, "all_n") == reduce_efficient(t)
        assert reduce_term(t, "odd_n") == reduce_odd(t)
        assert reduce_term(t, "naive") == reduce_naive(t)
        with pytest.raises(ValueError):
            reduce_term(t, "fast")

    def test_generic_term_shape(self):
        t = generic_term(5)
        assert t.n == 5
        assert t.depth == 5
        assert len({t.lower, *t.letters, t.upper}) == 7
        with pytest.raises(ValueError):
            generic_term(0)

"""Depth reduction strategies for iterated-integral terms.

A term of weight n has (maximal) depth n.  Each strategy below rewrites a
generic term, modulo shuffle products, as a combination of terms of depth
at most n - 2.  The workhorse is ``transposition_reduce`` from
:mod:`mplred.hyperlog`; what varies is which transpositions get combined
and with which coefficients.

Three strategies are provided:

* ``reduce_naive`` -- averages ``permutation_reduce`` over all (2, n-2)
  shuffle permutations.  Simple, but each summand is itself a product of
  transpositions, so the output is large.
* ``reduce_efficient`` -- a telescoped combination of single
  transpositions between neighbouring grid placements.  Much smaller
  output, valid for every n >= 3.
* ``reduce_odd`` -- for odd n only, an even shorter combination that
  avoids the division by floor(n/2) altogether.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LinearCombination, enumerate_shuffles
from .hyperlog import (
    HExpr,
    HTerm,
    INFINITY,
    parse_point,
    permutation_reduce,
    transposition_reduce,
)

__all__ = [
    "ReductionRelation",
    "grid_term",
    "line_term",
    "coeff_c",
    "efficient_plan",
    "odd_plan",
    "reduce_naive",
    "reduce_efficient",
    "reduce_odd",
    "reduce_term",
    "generic_term",
]


def grid_term(t: HTerm, i: int, j: int) -> HTerm:
    """Rearrangement of ``t`` with the first letter at position ``i`` and
    the second at position ``j``; the remaining letters keep their order.

    ``grid_term(t, 1, 2)`` is ``t`` itself.
    """
    n = t.n
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    word: list = [None] * n
    word[i - 1] = t.letters[0]
    word[j - 1] = t.letters[1]
    rest = iter(t.letters[2:])
    for k in range(n):
        if word[k] is None:
            word[k] = next(rest)
    return t.with_letters(tuple(word))


def line_term(t: HTerm, i: int) -> HTerm:
    """Rearrangement of ``t`` with the first letter moved to position ``i``
    and all other letters kept in order.  ``line_term(t, 1)`` is ``t``.
    """
    n = t.n
    if not (1 <= i <= n):
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    word = list(t.letters[1:])
    word.insert(i - 1, t.letters[0])
    return t.with_letters(tuple(word))


def coeff_c(n: int, first: tuple[int, int], second: tuple[int, int]) -> int:
    """Integer coefficient attached to the relation that exchanges grid
    placement ``first`` for ``second`` in the efficient reduction at
    weight ``n``.

    Two families of adjacent placements occur:

    * column steps ``(i-1, j) -> (i, j)`` with ``2 <= i < j <= n``:
      coefficient 1 when ``i - j`` is odd, else 0;
    * top-row steps ``(1, j) -> (1, j+1)`` with ``2 <= j <= n - 1``:
      coefficient ``(-1)**j * (n//2 - j//2)``.

    Any other pair of placements raises ``ValueError``.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    a, b = first
    c, d = second
    if a == 1 and c == 1 and d == b + 1 and 2 <= b <= n - 1:
        return (-1) ** b * (n // 2 - b // 2)
    if b == d and c == a + 1 and 2 <= c < d <= n:
        return 1 if (c - d) % 2 else 0
    raise ValueError(f"no coefficient for placements {first} -> {second} at n={n}")


@dataclass(frozen=True)
class ReductionRelation:
    """One signed transposition relation inside a reduction formula.

    ``grid`` gives the placement of the leading letter(s) in the base
    rearrangement, ``swap`` the two letter positions that the relation
    exchanges, and ``coeff`` the (already sign- and normalisation-adjusted)
    multiple with which the expanded relation enters the reduction.
    """

    label: str
    grid: tuple[int, ...]
    swap: tuple[int, int]
    coeff: Fraction

    def base_term(self, t: HTerm) -> HTerm:
        if len(self.grid) == 2:
            return grid_term(t, *self.grid)
        return line_term(t, self.grid[0])

    def expand(self, t: HTerm) -> HExpr:
        return transposition_reduce(self.base_term(t), *self.swap)


def efficient_plan(n: int) -> list[ReductionRelation]:
    """The signed relation list realising the efficient reduction at
    weight ``n``.  Applied to a term ``t``, the sum of
    ``coeff * expand(t)`` over the list equals ``t`` modulo shuffle
    products.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    m = n // 2
    plan = []
    for j in range(3, n + 1):
        for i in range(2, j):
            c = coeff_c(n, (i - 1, j), (i, j))
            if c == 0:
                continue
            plan.append(
                ReductionRelation(
                    label=f"R({i - 1},{j}|{i},{j})",
                    grid=(i - 1, j),
                    swap=(i - 1, i),
                    coeff=Fraction(-c, m),
                )
            )
    for j in range(2, n):
        c = coeff_c(n, (1, j), (1, j + 1))
        if c == 0:
            continue
        plan.append(
            ReductionRelation(
                label=f"R(1,{j}|1,{j + 1})",
                grid=(1, j),
                swap=(j, j + 1),
                coeff=Fraction(c, m),
            )
        )
    return plan


def odd_plan(n: int) -> list[ReductionRelation]:
    """The relation list for the odd-weight shortcut.  Requires odd
    ``n >= 3``.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    return [
        ReductionRelation(
            label=f"R({2 * j}|{2 * j + 1})",
            grid=(2 * j,),
            swap=(2 * j, 2 * j + 1),
            coeff=Fraction(-1),
        )
        for j in range(1, n // 2 + 1)
    ]


def _expand_plan(t: HTerm, plan: list[ReductionRelation]) -> HExpr:
    out = LinearCombination.zero()
    for rel in plan:
        out.add_scaled(rel.expand(t), rel.coeff)
    return out


def reduce_naive(t: HTerm) -> HExpr:
    """Rewrite ``t``, modulo shuffle products, in depth <= n - 2 by
    averaging ``permutation_reduce`` over all (2, n-2) shuffles.
    """
    n = t.n
    if n < 3:
        raise ValueError(f"need a term of weight >= 3, got weight {n}")
    m = n // 2
    out = LinearCombination.zero()
    for sp in enumerate_shuffles(2, n - 2):
        out.add_scaled(permutation_reduce(t, sp.sigma), Fraction(-1, m))
    return out


def reduce_efficient(t: HTerm) -> HExpr:
    """Rewrite ``t``, modulo shuffle products, in depth <= n - 2 using the
    telescoped single-transposition plan.  Works for every weight >= 3.
    """
    if t.n < 3:
        raise ValueError(f"need a term of weight >= 3, got weight {t.n}")
    return _expand_plan(t, efficient_plan(t.n))


def reduce_odd(t: HTerm) -> HExpr:
    """Rewrite ``t``, modulo shuffle products, in depth <= n - 2.  Odd
    weights only; shorter than the general plan and free of denominators.
    """
    n = t.n
    if n % 2 == 0:
        raise ValueError(f"odd-weight reduction needs odd weight, got {n}")
    if n < 3:
        raise ValueError(f"need a term of weight >= 3, got weight {n}")
    return _expand_plan(t, odd_plan(n))


_MODES = {
    "all_n": reduce_efficient,
    "odd_n": reduce_odd,
    "naive": reduce_naive,
}


def reduce_term(t: HTerm, mode: str = "all_n") -> HExpr:
    """Dispatch to one of the reduction strategies by name."""
    try:
        fn = _MODES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; pick one of {sorted(_MODES)}") from None
    return fn(t)


def generic_term(n: int) -> HTerm:
    """A weight-``n`` term on distinct named points with the deformation
    slot at infinity: ``[a | b,...  // inf | z]`` style.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n + 2 > len(string.ascii_lowercase):
        raise ValueError(f"n={n} needs more than 26 point names")
    names = string.ascii_lowercase
    return HTerm(
        parse_point(names[0]),
        tuple(parse_point(names[k]) for k in range(1, n + 1)),
        INFINITY,
        parse_point(names[n + 1]),
    )

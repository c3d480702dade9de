"""Loading of the shipped golden expressions.

The data files store linear combinations of multiple polylogarithms in a
compact bracket encoding.  Every group carries an index tuple and a scale,
and each term is a pair ``[coefficient, arguments]`` where the arguments
are strings of point characters ('a'..'g' for variables, '*' for the point
at infinity).  A single string of length ``3 + depth`` abbreviates coupled
cross-ratio arguments -- all slots share the leading triple -- while a
list of 4-character strings gives one cross-ratio per argument slot.

The Li_5 file uses a different term shape: ``[coefficient, sign, exponents]``
encodes Li_5 of +-x^a (1-x)^b y^c (1-y)^d (x-y)^e.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from ..algebra import LinearCombination
from ..hyperlog import INFINITY, Point, Variable
from ..mpl import MplExpr, MplTerm, cross_ratio, li_to_I, monomial

__all__ = [
    "DEFAULT_BINDING",
    "golden_names",
    "load_raw",
    "bind_points",
    "expand_coupled",
    "bracket_term",
    "rows_to_expr",
    "load_expr",
    "load_li5_expr",
]


def _default_binding() -> dict[str, Point]:
    binding = {c: Variable(c) for c in "abcdefg"}
    binding["*"] = INFINITY
    return binding


DEFAULT_BINDING = _default_binding()

_CACHE: dict[str, dict] = {}


def golden_names() -> list[str]:
    root = resources.files(__package__) / "data"
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def load_raw(name: str) -> dict:
    """Parsed JSON for one golden file (cached; treat as read-only)."""
    if name not in _CACHE:
        path = resources.files(__package__) / "data" / f"{name}.json"
        _CACHE[name] = json.loads(path.read_text())
    return _CACHE[name]


def bind_points(pattern: str, binding) -> tuple[Point, ...]:
    return tuple(binding[c] for c in pattern)


def expand_coupled(patterns, depth: int) -> list[str]:
    """Normalize bracket arguments to one 4-character pattern per slot."""
    if len(patterns) == 1 and len(patterns[0]) == 3 + depth and depth != 1:
        triple = patterns[0][:3]
        return [triple + tail for tail in patterns[0][3:]]
    if len(patterns) != depth or any(len(p) != 4 for p in patterns):
        raise ValueError(f"bad bracket arguments {patterns!r} for depth {depth}")
    return list(patterns)


def bracket_term(indices, patterns, binding=None) -> MplTerm:
    """Instantiate one bracket: indices plus point patterns -> MplTerm."""
    if binding is None:
        binding = DEFAULT_BINDING
    args = [
        cross_ratio(*bind_points(p, binding))
        for p in expand_coupled(list(patterns), len(indices))
    ]
    return MplTerm(indices, args)


def rows_to_expr(rows, binding=None) -> MplExpr:
    """Accumulate (coefficient, indices, patterns) rows into an expression."""
    out = LinearCombination()
    for coeff, indices, patterns in rows:
        out.add_scaled(
            LinearCombination.single(bracket_term(indices, patterns, binding)),
            Fraction(coeff),
        )
    return out


def iter_rows(data: dict):
    """Yield (coefficient, indices, patterns) with group scale and prefactor applied."""
    prefactor = Fraction(data.get("prefactor", "1"))
    for group in data["groups"]:
        indices = tuple(group["indices"])
        scale = prefactor * Fraction(group["scale"])
        for coeff, patterns in group["terms"]:
            yield (scale * Fraction(coeff), indices, tuple(patterns))


def load_expr(name: str, binding=None) -> MplExpr:
    """Golden expression as a canonical MplExpr, optionally re-bound.

    ``binding`` maps pattern characters to points; replacing the default
    binding evaluates the same combination at other points (for example
    the upper-bound companion of a reduction, or a cyclic shift).
    """
    return rows_to_expr(iter_rows(load_raw(name)), binding)


def _li5_arg(sign: str, exps):
    a, b, c, d, e = exps
    return monomial(
        -1 if sign == "-" else 1,
        x=a, omv_x=b, y=c, omv_y=d, dif_x_y=e,
    )


def load_li5_expr(name: str = "i32_li5_lift") -> MplExpr:
    """The Li_5 golden combination, written in I form (variables x and y)."""
    data = load_raw(name)
    out = LinearCombination()
    for group in data["groups"]:
        scale = Fraction(group["scale"])
        for coeff, sign, exps in group["terms"]:
            li_sign, term = li_to_I([5], [_li5_arg(sign, exps)])
            out.add_scaled(
                LinearCombination.single(term), scale * Fraction(coeff) * li_sign
            )
    return out

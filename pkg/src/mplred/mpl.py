"""Multiple polylogarithm terms whose arguments are cross-ratios or monomials.

The reduction machinery in :mod:`mplred.reduction` outputs hyperlogarithm
terms; here they are rewritten as multiple polylogarithms I_{s1,...,sk}
whose arguments are cross-ratios of the original points (sharing their
first three slots -- "coupled" arguments), plus a few fixed monomial
argument shapes used by the identity catalog.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .algebra import LinearCombination
from .hyperlog import (
    HTerm,
    INFINITY,
    Point,
    parse_point,
    render_point,
)


class DegenerateCrossRatioError(ValueError):
    """The four points are not in general position, so the ratio is 0, 1 or inf."""


class DivergentTermError(ValueError):
    """The term corresponds to a divergent integral and has no MPL value."""


# ---------------------------------------------------------------------------
# Cross-ratios
# ---------------------------------------------------------------------------

def _klein_images(points: tuple) -> list[tuple]:
    a, b, c, d = points
    return [(a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a)]


class CrossRatio:
    """(a-c)(b-d) / ((a-d)(b-c)), stored by its canonical slot ordering.

    The value is invariant under the double transpositions (ab)(cd),
    (ac)(bd), (ad)(bc) of the slots; construction picks the least of the
    four equivalent orderings, so equal values compare equal syntactically.
    """

    __slots__ = ("points", "_hash")

    def __init__(self, points: tuple[Point, Point, Point, Point]):
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "_hash", hash(("CR",) + tuple(points)))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("CrossRatio is immutable")

    def __eq__(self, other):
        return isinstance(other, CrossRatio) and self.points == other.points

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return ("cr",) + tuple(p.sort_key() for p in self.points)

    def __repr__(self):
        return "CR(%s)" % ",".join(render_point(p) for p in self.points)

    def point_set(self) -> frozenset:
        return frozenset(self.points)

    def value(self, resolve) -> Fraction:
        """Evaluate with resolve(point) -> Fraction, or None for infinity."""
        a, b, c, d = (resolve(p) for p in self.points)
        vals = (a, b, c, d)
        if sum(1 for v in vals if v is None) > 1:
            raise DegenerateCrossRatioError(f"{self} has more than one infinite slot")
        if a is None:
            num, den = (b - d), (b - c)
        elif b is None:
            num, den = (a - c), (a - d)
        elif c is None:
            num, den = (b - d), (a - d)
        elif d is None:
            num, den = (a - c), (b - c)
        else:
            num, den = (a - c) * (b - d), (a - d) * (b - c)
        if den == 0 or num == 0 or num == den:
            raise DegenerateCrossRatioError(f"{self} degenerates under this assignment")
        return num / den


def cross_ratio(a: Point, b: Point, c: Point, d: Point) -> CrossRatio:
    """Build the canonical CrossRatio of four points in general position."""
    points = (a, b, c, d)
    if len(set(points)) != 4:
        raise DegenerateCrossRatioError(
            "cross-ratio needs four pairwise distinct points, got "
            + ",".join(render_point(p) for p in points)
        )
    if sum(1 for p in points if p is INFINITY) > 1:
        raise DegenerateCrossRatioError("at most one slot may be infinity")
    best = min(_klein_images(points), key=lambda q: tuple(p.sort_key() for p in q))
    return CrossRatio(best)


# ---------------------------------------------------------------------------
# Monomial arguments (for the identity catalog in two variables)
# ---------------------------------------------------------------------------

#: factor kinds: ("var", name) -> name, ("omv", name) -> 1 - name,
#: ("dif", n1, n2) -> n1 - n2
_FACTOR_ORDER = {"var": 0, "omv": 1, "dif": 2}


class MonomialArg:
    """A signed monomial  +- prod f_i^{e_i}  in variables and 1-v, v-w factors."""

    __slots__ = ("sign", "factors", "_hash")

    def __init__(self, sign: int, factors):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        cleaned = tuple(
            sorted(
                ((f, e) for f, e in dict(factors).items() if e),
                key=lambda fe: (_FACTOR_ORDER[fe[0][0]], fe[0]),
            )
        )
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "factors", cleaned)
        object.__setattr__(self, "_hash", hash(("mon", sign, cleaned)))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("MonomialArg is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialArg)
            and self.sign == other.sign
            and self.factors == other.factors
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return ("mon", self.sign, self.factors)

    def __mul__(self, other: "MonomialArg") -> "MonomialArg":
        combined = dict(self.factors)
        for f, e in other.factors:
            combined[f] = combined.get(f, 0) + e
        return MonomialArg(self.sign * other.sign, combined)

    def inverse(self) -> "MonomialArg":
        return MonomialArg(self.sign, {f: -e for f, e in self.factors})

    def point_set(self) -> frozenset:
        return frozenset()

    def value(self, resolve_var) -> Fraction:
        v = Fraction(self.sign)
        for (kind, *names), e in self.factors:
            if kind == "var":
                base = resolve_var(names[0])
            elif kind == "omv":
                base = 1 - resolve_var(names[0])
            else:
                base = resolve_var(names[0]) - resolve_var(names[1])
            if base == 0:
                raise DegenerateCrossRatioError(f"{self} vanishes under this assignment")
            v *= base ** e
        return v

    def __repr__(self):
        if not self.factors:
            return "1" if self.sign == 1 else "-1"
        bits = []
        for (kind, *names), e in self.factors:
            if kind == "var":
                base = names[0]
            elif kind == "omv":
                base = f"(1-{names[0]})"
            else:
                base = f"({names[0]}-{names[1]})"
            bits.append(base if e == 1 else f"{base}^{e}")
        text = "*".join(bits)
        return text if self.sign == 1 else "-" + text


def var_arg(name: str) -> MonomialArg:
    return MonomialArg(1, {("var", name): 1})


def monomial(sign: int = 1, **powers) -> MonomialArg:
    """Convenience builder: monomial(x=1, y=-1) -> x/y.

    Keyword names are variable names; use omv_<name> for (1-<name>) and
    dif_<a>_<b> for (<a>-<b>).
    """
    factors = {}
    for key, e in powers.items():
        if key.startswith("omv_"):
            factors[("omv", key[4:])] = e
        elif key.startswith("dif_"):
            _, a, b = key.split("_")
            factors[("dif", a, b)] = e
        else:
            factors[("var", key)] = e
    return MonomialArg(sign, factors)


# ---------------------------------------------------------------------------
# MPL terms and expressions
# ---------------------------------------------------------------------------


class MplTerm:
    """I_{s1,...,sk}(z1,...,zk) with cross-ratio or monomial arguments."""

    __slots__ = ("indices", "args", "_hash")

    def __init__(self, indices, args):
        indices = tuple(int(s) for s in indices)
        args = tuple(args)
        if len(indices) != len(args) or not indices:
            raise ValueError("need as many indices as arguments, at least one")
        if any(s < 1 for s in indices):
            raise ValueError("indices must be >= 1")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "_hash", hash(("mpl", indices, args)))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("MplTerm is immutable")

    @property
    def weight(self) -> int:
        return sum(self.indices)

    @property
    def depth(self) -> int:
        return len(self.indices)

    def __eq__(self, other):
        return (
            isinstance(other, MplTerm)
            and self.indices == other.indices
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (
            self.weight,
            len(self.indices),
            self.indices,
            tuple(a.sort_key() for a in self.args),
        )

    def point_set(self) -> frozenset:
        out = frozenset()
        for a in self.args:
            out |= a.point_set()
        return out

    def infinity_count(self) -> int:
        return sum(1 for a in self.args if INFINITY in a.point_set())

    def __repr__(self):
        inds = ",".join(str(s) for s in self.indices)
        args = ", ".join(repr(a) for a in self.args)
        return f"I_{{{inds}}}({args})"


#: An MplExpr is a LinearCombination whose terms are MplTerm instances.
MplExpr = LinearCombination


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------


def h_to_I(t: HTerm) -> tuple[Point, tuple[Point, ...], Point]:
    """Unwrap a term with x = inf as an ordinary iterated-integral word."""
    if t.xslot is not INFINITY:
        raise ValueError(f"x slot of {t} is not infinity; use to_mpl instead")
    return (t.lower, t.letters, t.upper)


def to_mpl(t: HTerm) -> MplTerm:
    """Rewrite [a0 | a1..an // x | a(n+1)] as an MPL with cross-ratio args.

    Letters equal to the lower bound become zero entries of the integral
    word and are absorbed into the index string; every other letter a
    contributes one depth slot with argument CR(x, a0, a(n+1), a).
    """
    runs: list[int] = []
    args: list = []
    for a in t.letters:
        if a is t.lower:
            if not runs:
                raise DivergentTermError(f"{t} has a leading letter equal to its lower bound")
            runs[-1] += 1
        else:
            runs.append(1)
            args.append(cross_ratio(t.xslot, t.lower, t.upper, a))
    if not runs:
        raise DivergentTermError(f"{t} has no letters distinct from its lower bound")
    return MplTerm(runs, args)


def hexpr_to_mpl(e: LinearCombination) -> MplExpr:
    out = LinearCombination()
    for t, c in e.items():
        out.add_items([(to_mpl(t), c)])
    return out


def li_to_I(indices, args) -> tuple[int, MplTerm]:
    """Convert Li_{s1,...,sk}(z1,...,zk) to its I form.

    Returns (sign, term) with sign = (-1)^k and the j-th argument of the
    term equal to 1/(z_j * z_{j+1} * ... * z_k).
    """
    indices = tuple(indices)
    args = tuple(args)
    if len(indices) != len(args):
        raise ValueError("need as many indices as arguments")
    k = len(args)
    new_args = []
    for j in range(k):
        prod = args[j]
        for z in args[j + 1 :]:
            prod = prod * z
        new_args.append(prod.inverse())
    return ((-1) ** k, MplTerm(indices, new_args))


# ---------------------------------------------------------------------------
# Coupled-argument structure and rendering
# ---------------------------------------------------------------------------


def coupled_structure(term: MplTerm):
    """Recover (p, q, r), (tails...) if all arguments share a slot triple.

    Arguments of a term produced by to_mpl share their first three slots;
    canonicalization may have reordered them, so intersect the candidate
    leading triples of the four equivalent orderings of each argument.
    Returns None when there is no common triple (or any non-CR argument).
    """
    if not all(isinstance(a, CrossRatio) for a in term.args):
        return None
    per_arg = []
    for a in term.args:
        per_arg.append({img[:3]: img[3] for img in _klein_images(a.points)})
    common = set(per_arg[0])
    for cand in per_arg[1:]:
        common &= set(cand)
    if not common:
        return None
    if term.depth == 1:
        # a single argument always "couples"; normalize to its stored slots
        pts = term.args[0].points
        return pts[:3], (pts[3],)
    triple = min(common, key=lambda t: tuple(p.sort_key() for p in t))
    if len(common) > 1:
        # distinct tails make the triple unique; equal tails cannot occur
        # since the term would repeat an argument -- defensive fallback
        tails0 = {cand[triple] for cand in per_arg}
        if len(tails0) < len(per_arg):
            return None
    return triple, tuple(cand[triple] for cand in per_arg)


def coupled_render(term: MplTerm) -> str:
    """Compact text like [abcde]_{3,1} for coupled cross-ratio terms.

    Falls back to the full rendering when the arguments do not share a
    leading triple.
    """
    structure = coupled_structure(term)
    inds = ",".join(str(s) for s in term.indices)
    if structure is None:
        return repr(term)
    triple, tails = structure
    names = [render_point(p) for p in triple + tails]
    sep = "" if all(len(n) == 1 for n in names) else ","
    return "[%s]_{%s}" % (sep.join(names), inds)


# ---------------------------------------------------------------------------
# JSON serialization (one term per object; expressions are term lists)
# ---------------------------------------------------------------------------


def mpl_term_to_json(term: MplTerm) -> dict:
    args = []
    for a in term.args:
        if isinstance(a, CrossRatio):
            args.append([render_point(p) for p in a.points])
        else:
            args.append(
                {
                    "sign": a.sign,
                    "factors": [list(f) + [e] for f, e in a.factors],
                }
            )
    return {"indices": list(term.indices), "args": args}


def mpl_term_from_json(obj: dict) -> MplTerm:
    args = []
    for a in obj["args"]:
        if isinstance(a, list):
            pts = tuple(parse_point(n) for n in a)
            args.append(cross_ratio(*pts))
        else:
            factors = {}
            for *f, e in a["factors"]:
                factors[tuple(f)] = e
            args.append(MonomialArg(a["sign"], factors))
    return MplTerm(obj["indices"], args)


def mpl_expr_to_json(expr: LinearCombination) -> list:
    out = []
    for term, coeff in expr.sorted_items():
        entry = mpl_term_to_json(term)
        entry["coeff"] = str(coeff)
        out.append(entry)
    return out


def mpl_expr_from_json(data) -> MplExpr:
    if isinstance(data, str):
        data = json.loads(data)
    out = LinearCombination()
    out.add_items(
        (mpl_term_from_json(obj), Fraction(obj.get("coeff", 1))) for obj in data
    )
    return out

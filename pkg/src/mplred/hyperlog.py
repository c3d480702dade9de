"""Hyperlogarithm terms with a movable base slot, and the operator calculus.

A term ``[a0 | a1,...,an // x | a(n+1)]`` stands for an iterated integral
from ``a0`` to ``a(n+1)`` against the forms ``dt/(t-a_i) - dt/(t-x)``; the
slot ``x`` is a parameter that the operators below move around.  When
``x = inf`` this is the ordinary iterated integral ``I(a0; a1..an; a(n+1))``.

Everything here works modulo products (the shuffle ideal): several
operators silently drop terms that are products of lower-weight pieces,
and the expansions they return are only claimed to agree with their input
modulo products.  The symbolic machinery in :mod:`mplred.symbolic` is used
by the test-suite to machine-check those claims.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import LinearCombination, shuffle_letter_seqs


# ---------------------------------------------------------------------------
# Points of the projective line
# ---------------------------------------------------------------------------

_KIND_RANK = {"zero": 0, "one": 1, "var": 2, "inf": 3}


class Point:
    """A point of P^1: a named variable, the constant 0 or 1, or infinity.

    Points are interned, so identity comparison coincides with equality.
    """

    __slots__ = ("kind", "name")
    _cache: dict = {}

    def __new__(cls, kind: str, name: str = ""):
        if kind not in _KIND_RANK:
            raise ValueError(f"unknown point kind {kind!r}")
        if kind == "var" and not name:
            raise ValueError("a variable point needs a name")
        if kind != "var":
            name = ""
        key = (kind, name)
        pt = cls._cache.get(key)
        if pt is None:
            pt = object.__new__(cls)
            object.__setattr__(pt, "kind", kind)
            object.__setattr__(pt, "name", name)
            cls._cache[key] = pt
        return pt

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Point is immutable")

    def is_infinity(self) -> bool:
        return self.kind == "inf"

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.name)

    def __repr__(self) -> str:
        return render_point(self)

    # interned: default object identity/hash are correct and fast


def Variable(name: str) -> Point:
    return Point("var", name)


ZERO = Point("zero")
ONE = Point("one")
INFINITY = Point("inf")


def render_point(p: Point) -> str:
    if p.kind == "var":
        return p.name
    return {"zero": "0", "one": "1", "inf": "inf"}[p.kind]


def parse_point(text: str) -> Point:
    text = text.strip()
    if text == "0":
        return ZERO
    if text == "1":
        return ONE
    if text in ("inf", "oo", "infinity"):
        return INFINITY
    if not text or not text.replace("_", "").isalnum():
        raise ValueError(f"cannot parse point name {text!r}")
    return Variable(text)


def variables(names: str) -> tuple[Point, ...]:
    """Split a whitespace/comma separated list of names into variable Points."""
    return tuple(parse_point(n) for n in names.replace(",", " ").split())


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


class HTerm:
    """The symbol ``[lower | letters // xslot | upper]`` (letters nonempty)."""

    __slots__ = ("lower", "letters", "xslot", "upper", "_hash")

    def __init__(self, lower: Point, letters, xslot: Point, upper: Point):
        letters = tuple(letters)
        if not letters:
            raise ValueError("a term needs at least one letter")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "xslot", xslot)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "_hash", hash((lower, letters, xslot, upper)))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("HTerm is immutable")

    @property
    def n(self) -> int:
        """The weight: number of letter slots."""
        return len(self.letters)

    @property
    def depth(self) -> int:
        """Number of letters different from the lower bound."""
        return sum(1 for a in self.letters if a is not self.lower)

    def with_letters(self, letters) -> "HTerm":
        return HTerm(self.lower, letters, self.xslot, self.upper)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HTerm)
            and self._hash == other._hash
            and self.lower is other.lower
            and self.letters == other.letters
            and self.xslot is other.xslot
            and self.upper is other.upper
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (
            len(self.letters),
            self.lower.sort_key(),
            tuple(a.sort_key() for a in self.letters),
            self.xslot.sort_key(),
            self.upper.sort_key(),
        )

    def __repr__(self) -> str:
        return render_hterm(self)


def render_hterm(t: HTerm) -> str:
    letters = ",".join(render_point(a) for a in t.letters)
    return "[%s | %s // %s | %s]" % (
        render_point(t.lower),
        letters,
        render_point(t.xslot),
        render_point(t.upper),
    )


#: An HExpr is a LinearCombination whose terms are HTerm instances.
HExpr = LinearCombination


def hexpr(*pairs) -> HExpr:
    """Build an HExpr from (coeff, term) pairs."""
    out = LinearCombination()
    out.add_items((t, Fraction(c)) for c, t in pairs)
    return out


class DegenerateTermError(ValueError):
    """The term's integral representation diverges and has no assigned value."""


class PurePowerError(ValueError):
    """The word is a power of a single letter, i.e. a product of logs."""


def normalize_hterm(t: HTerm) -> HExpr:
    """Normal form of a single term: 0, the term itself, or an error.

    Vanishing rules are checked first: a term with equal bounds is zero
    (empty integration path), as is one with a letter equal to the x slot
    (the integrand form vanishes).  After that, bound/letter coincidences
    that would make the integral divergent raise DegenerateTermError.
    The function is idempotent on its single-term output.
    """
    if t.lower is t.upper:
        return LinearCombination.zero()
    if any(a is t.xslot for a in t.letters):
        return LinearCombination.zero()
    if t.lower is t.letters[0]:
        raise DegenerateTermError(f"first letter equals the lower bound in {t}")
    if t.letters[-1] is t.upper:
        raise DegenerateTermError(f"last letter equals the upper bound in {t}")
    if t.lower is t.xslot:
        raise DegenerateTermError(f"x slot equals the lower bound in {t}")
    if t.xslot is t.upper:
        raise DegenerateTermError(f"x slot equals the upper bound in {t}")
    return LinearCombination.single(t)


def normalize_hexpr(e: HExpr) -> HExpr:
    return e.map_terms(normalize_hterm)


# ---------------------------------------------------------------------------
# Substitution operators
# ---------------------------------------------------------------------------


def substitute_X(t: HTerm, positions, y: Point) -> HTerm:
    """Replace the letters at the given 1-based positions with the point y."""
    positions = set(positions)
    if not positions <= set(range(1, t.n + 1)):
        raise ValueError(f"positions {sorted(positions)} out of range for n={t.n}")
    letters = tuple(
        y if (k + 1) in positions else a for k, a in enumerate(t.letters)
    )
    return t.with_letters(letters)


def operator_A(t: HTerm, i: int, I) -> HTerm:
    """Replace the letters at positions I by the letter at position i (i in I)."""
    I = set(I)
    if i not in I:
        raise ValueError(f"position i={i} must belong to I={sorted(I)}")
    return substitute_X(t, I, t.letters[i - 1])


def operator_B(t: HTerm, i: int) -> HExpr:
    """Alternating sum of A(t, i, I) over subsets I containing i, |I| >= 2.

    Modulo products this equals  t + swap_x(t, i);  each summand repeats the
    letter a_i at least twice, which is what later drives the depth drop.
    """
    n = t.n
    if not 1 <= i <= n:
        raise ValueError(f"position i={i} out of range for n={n}")
    others = [p for p in range(1, n + 1) if p != i]
    out = LinearCombination()
    for k in range(1, n):
        for combo in itertools.combinations(others, k):
            term = operator_A(t, i, set(combo) | {i})
            out.add_scaled(normalize_hterm(term), (-1) ** (k + 1))
    return out


def swap_x(t: HTerm, i: int) -> HTerm:
    """Exchange the letter at position i with the point in the x slot."""
    if not 1 <= i <= t.n:
        raise ValueError(f"position i={i} out of range for n={t.n}")
    letters = list(t.letters)
    letters[i - 1], new_x = t.xslot, letters[i - 1]
    return HTerm(t.lower, letters, new_x, t.upper)


# ---------------------------------------------------------------------------
# Shuffling out the front letter, and splitting the base point
# ---------------------------------------------------------------------------


def shuffle_out_front(t: HTerm, y: Point) -> HExpr:
    """Remove the maximal front run of y by shuffling it deeper, mod products.

    ``[a0 | {y}^s, b(s+1),...,b(n) // x | up]`` becomes
    ``(-1)^s [a0 | b(s+1), {y}^s sh (b(s+2)...b(n)) // x | up]``.
    If the whole word is the run (s = n) the term is a power of a single
    log, hence a product; PurePowerError tells the caller to discard it.
    """
    s = 0
    while s < t.n and t.letters[s] is y:
        s += 1
    if s == 0:
        return normalize_hterm(t)
    if s == t.n:
        raise PurePowerError(f"every letter of {t} equals {render_point(y)}")
    front = t.letters[s]
    rest = t.letters[s + 1 :]
    out = LinearCombination()
    sign = (-1) ** s
    for word, mult in shuffle_letter_seqs((y,) * s, rest).items():
        out.add_scaled(normalize_hterm(t.with_letters((front,) + word)), mult * sign)
    return out


def split_basepoint(t: HTerm, c: Point) -> HExpr:
    """Rebase the integral at c, mod products:  [a0|w//x|up] =
    [c|w//x|up] - [c|w//x|a0].  Requires c distinct from the first letter
    and from the x slot, so both pieces converge.
    """
    if c is t.letters[0]:
        raise DegenerateTermError(f"cannot split {t} at its first letter")
    if c is t.xslot:
        raise DegenerateTermError(f"cannot split {t} at its x slot")
    plus = normalize_hterm(HTerm(c, t.letters, t.xslot, t.upper))
    minus = normalize_hterm(HTerm(c, t.letters, t.xslot, t.lower))
    return plus - minus


# ---------------------------------------------------------------------------
# The depth-dropping operator D and its composites
# ---------------------------------------------------------------------------


def operator_D(t: HTerm, i: int) -> HExpr:
    """The explicit low-depth expansion of  t + swap_x(t, i),  mod products.

    Pipeline: expand operator_B(t, i); in each resulting term the letter
    y = a_i occurs at least twice, so after shuffling y out of the front and
    splitting the base point at y, every output term has at most n-2
    letters different from its lower bound.  Terms that are pure powers of
    y (products of logs) are dropped.
    """
    y = t.letters[i - 1]
    out = LinearCombination()
    for bterm, coeff in operator_B(t, i).items():
        if all(a is y for a in bterm.letters):
            continue
        for sterm, c2 in shuffle_out_front(bterm, y).items():
            out.add_scaled(split_basepoint(sterm, y), coeff * c2)
    return out


def transposition_reduce(t: HTerm, i: int, j: int) -> HExpr:
    """Low-depth expansion of  t + (t with letters i and j swapped).

    Three D expansions chain together: the x slot moves to position i,
    then position j, and the intermediate terms cancel in pairs.
    """
    if not 1 <= i < j <= t.n:
        raise ValueError(f"need 1 <= i < j <= {t.n}, got ({i}, {j})")
    t1 = t
    t2 = swap_x(t1, i)
    t3 = swap_x(t2, j)
    return operator_D(t1, i) - operator_D(t2, j) + operator_D(t3, i)


def apply_placement(t: HTerm, sigma) -> HTerm:
    """Place letter k at position sigma(k); sigma is a tuple of 1-based images."""
    sigma = tuple(sigma)
    n = t.n
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    letters = [None] * n
    for k in range(n):
        letters[sigma[k] - 1] = t.letters[k]
    return t.with_letters(letters)


def permutation_reduce(t: HTerm, sigma) -> HExpr:
    """Low-depth expansion of  (sigma placed t) - sgn(sigma) * t,  mod products.

    The permutation is peeled into transpositions; each peel contributes one
    transposition_reduce.  The identity permutation gives the empty sum.
    """
    sigma = tuple(sigma)
    n = t.n
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    out = LinearCombination()
    sign = 1
    while True:
        moved = next((k for k in range(1, n + 1) if sigma[k - 1] != k), None)
        if moved is None:
            break
        p, q = moved, sigma[moved - 1]
        # sigma = (p q) o sigma'; the pair (sigma' t, sigma t) differs by
        # swapping positions p and q.
        sigma_prime = tuple(
            p if v == q else (q if v == p else v) for v in sigma
        )
        placed = apply_placement(t, sigma_prime)
        out.add_scaled(
            transposition_reduce(placed, min(p, q), max(p, q)), sign
        )
        sigma = sigma_prime
        sign = -sign
    return out

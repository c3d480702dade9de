"""Exact-rational linear combinations, words, and shuffle combinatorics.

This module is the arithmetic substrate for everything else: sparse maps
from hashable terms to `fractions.Fraction` coefficients (kept in normal
form, i.e. no zero coefficients are ever stored), words over an arbitrary
alphabet, the recursive shuffle product, and the enumeration of
(r,s)-shuffle permutations together with their signed sums.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Iterator


class LinearCombination:
    """A sparse formal sum  sum_i  c_i * t_i  with exact rational c_i.

    Terms may be any hashable value; coefficients are Fractions (ints are
    accepted and coerced).  The internal map never stores a zero
    coefficient, so equality is plain dict equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        self._terms: dict = {}
        if terms:
            for t, c in terms.items():
                c = Fraction(c)
                if c:
                    self._terms[t] = c

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls()

    @classmethod
    def single(cls, term, coeff=1) -> "LinearCombination":
        lc = cls()
        c = Fraction(coeff)
        if c:
            lc._terms[term] = c
        return lc

    @classmethod
    def from_items(cls, items: Iterable[tuple[object, Fraction]]) -> "LinearCombination":
        lc = cls()
        lc.add_items(items)
        return lc

    # -- mutation helpers (used internally while building; results are
    #    treated as immutable once returned from public operations) --

    def add_items(self, items: Iterable[tuple[object, Fraction]]) -> None:
        terms = self._terms
        for t, c in items:
            nc = terms.get(t, 0) + c
            if nc:
                terms[t] = nc
            else:
                terms.pop(t, None)

    def add_scaled(self, other: "LinearCombination", factor=1) -> None:
        factor = Fraction(factor)
        if not factor:
            return
        terms = self._terms
        for t, c in other._terms.items():
            nc = terms.get(t, 0) + c * factor
            if nc:
                terms[t] = nc
            else:
                terms.pop(t, None)

    # -- pure operations --

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        out = LinearCombination(dict(self._terms))
        out.add_scaled(other)
        return out

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        out = LinearCombination(dict(self._terms))
        out.add_scaled(other, -1)
        return out

    def __neg__(self) -> "LinearCombination":
        return self.scale(-1)

    def scale(self, factor) -> "LinearCombination":
        factor = Fraction(factor)
        if not factor:
            return LinearCombination()
        return LinearCombination({t: c * factor for t, c in self._terms.items()})

    def map_terms(self, fn: Callable) -> "LinearCombination":
        """Apply ``fn(term) -> LinearCombination`` to every term and resum."""
        out = LinearCombination()
        for t, c in self._terms.items():
            out.add_scaled(fn(t), c)
        return out

    def coeff(self, term) -> Fraction:
        return self._terms.get(term, Fraction(0))

    def items(self) -> Iterator[tuple[object, Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self, key: Callable | None = None) -> list:
        """Items in canonical order (term sort_key when present, else repr)."""
        if key is None:
            key = _term_sort_key
        return sorted(self._terms.items(), key=lambda tc: key(tc[0]))

    def terms(self):
        return self._terms.keys()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for t, c in self.sorted_items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag}*"
            bits.append(f"{sign} {coeff}{t!r}")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else text


def _term_sort_key(term):
    sk = getattr(term, "sort_key", None)
    if sk is not None:
        return sk()
    return repr(term)


class Word:
    """An immutable word over an arbitrary alphabet (letters by value)."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable):
        object.__setattr__(self, "letters", tuple(letters))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self) -> str:
        return "Word(%s)" % (",".join(str(x) for x in self.letters) or "1")

    def sort_key(self):
        return tuple(_term_sort_key(x) for x in self.letters)


EMPTY_WORD = Word(())


def shuffle_letter_seqs(u: tuple, v: tuple) -> LinearCombination:
    """Shuffle two plain letter tuples; terms of the result are tuples."""
    out = LinearCombination()
    out.add_items((w, Fraction(1)) for w in _riffle(u, v))
    return out


def _riffle(u: tuple, v: tuple) -> Iterator[tuple]:
    # Index-choice enumeration: pick the positions of u among len(u)+len(v).
    r, s = len(u), len(v)
    if r == 0:
        yield tuple(v)
        return
    if s == 0:
        yield tuple(u)
        return
    n = r + s
    for posu in itertools.combinations(range(n), r):
        word = [None] * n
        for k, p in enumerate(posu):
            word[p] = u[k]
        itv = iter(v)
        for p in range(n):
            if word[p] is None:
                word[p] = next(itv)
        yield tuple(word)


def shuffle_words(u: Word, v: Word) -> LinearCombination:
    """The shuffle product u ⧢ v as a LinearCombination of Words.

    Every riffle interleaving appears with coefficient +1; repeated letters
    make multiplicities accumulate.  The empty word is the unit.
    """
    out = LinearCombination()
    out.add_items((Word(w), Fraction(1)) for w in _riffle(u.letters, v.letters))
    return out


class ShufflePermutation:
    """An (r,s)-shuffle: a bijection sigma on {1..r+s} increasing on each block."""

    __slots__ = ("sigma", "r", "s")

    def __init__(self, sigma: tuple[int, ...], r: int, s: int):
        if len(sigma) != r + s:
            raise ValueError("sigma has wrong length")
        if list(sigma[:r]) != sorted(sigma[:r]) or list(sigma[r:]) != sorted(sigma[r:]):
            raise ValueError("not an (r,s)-shuffle: blocks must be increasing")
        object.__setattr__(self, "sigma", tuple(sigma))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("ShufflePermutation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ShufflePermutation)
            and self.sigma == other.sigma
            and (self.r, self.s) == (other.r, other.s)
        )

    def __hash__(self):
        return hash((self.sigma, self.r, self.s))

    def __repr__(self):
        return f"ShufflePermutation({self.sigma}, r={self.r}, s={self.s})"

    def sign(self) -> int:
        return permutation_sign(self.sigma)

    def apply(self, letters: tuple) -> tuple:
        """Place letters[k] at target position sigma(k+1); return the new word."""
        n = len(letters)
        if n != self.r + self.s:
            raise ValueError("length mismatch")
        word = [None] * n
        for k in range(n):
            word[self.sigma[k] - 1] = letters[k]
        return tuple(word)


def enumerate_shuffles(r: int, s: int) -> list[ShufflePermutation]:
    """All C(r+s, r) shuffle permutations of block sizes (r, s)."""
    if r < 0 or s < 0:
        raise ValueError("block sizes must be non-negative")
    n = r + s
    out = []
    universe = range(1, n + 1)
    for first in itertools.combinations(universe, r):
        rest = tuple(p for p in universe if p not in first)
        out.append(ShufflePermutation(first + rest, r, s))
    assert len(out) == comb(n, r)
    return out


def permutation_sign(sigma: Iterable[int]) -> int:
    """(-1)^(inversion count) of a bijection given as a tuple of images."""
    seq = tuple(sigma)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def shuffle_sign_sum(n: int, r: int = 2) -> int:
    """Sum of sgn(sigma) over all (r, n-r)-shuffles, by direct enumeration.

    For r=2 the value is floor(n/2); the r=1 variant sums to 1 when n is odd.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0 <= r <= n:
        raise ValueError("block size out of range")
    return sum(p.sign() for p in enumerate_shuffles(r, n - r))

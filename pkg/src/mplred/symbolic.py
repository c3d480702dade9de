"""Symbol calculus for iterated integrals, and numeric identity checking.

The symbol of a word (a0; a1..an; a(n+1)) is computed by the standard
recursion: remove one letter at a time, tensoring on the ratio of
differences to its neighbours.  Tensors are linear combinations of tuples
of *letters*; a letter is a multiplicative combination of atoms (prime
numbers, or formal differences of points) and is stored either as a
`Letter` (formal mode) or an exact positive `Fraction` (specialized mode).
Signs of letters are torsion and are dropped; letters equal to 1 drop the
whole slot's term.

Identity checking works modulo products: project with `pi_project` (which
annihilates all shuffle products) or apply the cobracket
`delta_cobracket` (which additionally kills depth-one symbols), then
expand letters into atoms and verify exact cancellation.  Checks run on a
few random-but-seeded specializations of the variables.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import LinearCombination, shuffle_letter_seqs
from .hyperlog import HTerm, INFINITY, Point
from .mpl import CrossRatio, DegenerateCrossRatioError, MonomialArg, MplTerm

#: A Tensor is a LinearCombination whose terms are tuples of letters.
Tensor = LinearCombination


class GenericityError(ValueError):
    """The drawn values hit a degenerate configuration; redraw and retry."""


# ---------------------------------------------------------------------------
# Letters
# ---------------------------------------------------------------------------


class Letter:
    """A formal product of atoms with integer exponents, e.g. (x-1)*x^-1.

    Atoms are ("p", prime) for rational content or ("d", s, t) for the
    difference of the points rendered as s and t (stored in a canonical
    order; the overall sign is torsion and is not tracked).
    """

    __slots__ = ("atoms", "_hash")

    def __init__(self, atoms):
        atoms = tuple(sorted((a, e) for a, e in dict(atoms).items() if e))
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "_hash", hash(atoms))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Letter is immutable")

    def is_unit(self) -> bool:
        return not self.atoms

    def __eq__(self, other):
        return isinstance(other, Letter) and self.atoms == other.atoms

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.atoms:
            return "1"
        bits = []
        for atom, e in self.atoms:
            base = str(atom[1]) if atom[0] == "p" else f"({atom[1]}-{atom[2]})"
            bits.append(base if e == 1 else f"{base}^{e}")
        return "*".join(bits)


def _formal_letter(factors) -> Letter | None:
    """Combine difference factors ((p, q, exp)...) of Points into a Letter.

    Vanishing differences (p is q) and differences involving infinity are
    omitted; differences of the constants 0 and 1 are +-1, i.e. torsion,
    and are omitted too.  Returns None when everything cancels.
    """
    atoms: dict = {}
    for p, q, exp in factors:
        if p is q or p is INFINITY or q is INFINITY:
            continue
        if p.kind != "var" and q.kind != "var":
            continue  # |0 - 1| = 1, pure torsion
        a, b = sorted((p, q), key=lambda pt: pt.sort_key())
        key = ("d", _point_token(a), _point_token(b))
        atoms[key] = atoms.get(key, 0) + exp
    letter = Letter(atoms)
    return None if letter.is_unit() else letter


def _point_token(p: Point) -> str:
    return p.name if p.kind == "var" else {"zero": "0", "one": "1", "inf": "inf"}[p.kind]


def _value_letter(prev: Fraction, cur: Fraction, nxt: Fraction) -> Fraction | None:
    v = Fraction(1)
    if cur != nxt:
        v *= cur - nxt
    if cur != prev:
        v /= cur - prev
    v = abs(v)
    return None if v == 1 else v


def _point_letter(prev: Point, cur: Point, nxt: Point) -> Letter | None:
    return _formal_letter([(cur, nxt, 1), (cur, prev, -1)])


# ---------------------------------------------------------------------------
# The symbol recursion
# ---------------------------------------------------------------------------


def _letter_fn_for(word):
    return _point_letter if isinstance(word[0], Point) else _value_letter


def _symbol_rec(word: tuple, memo: dict, letter_fn) -> dict:
    cached = memo.get(word)
    if cached is not None:
        return cached
    m = len(word) - 2
    if m == 0:
        res = {(): Fraction(1)}
    else:
        res = {}
        for i in range(1, m + 1):
            letter = letter_fn(word[i - 1], word[i], word[i + 1])
            if letter is None:
                continue
            sub = word[:i] + word[i + 1 :]
            for tup, c in _symbol_rec(sub, memo, letter_fn).items():
                key = tup + (letter,)
                nc = res.get(key, 0) + c
                if nc:
                    res[key] = nc
                elif key in res:
                    del res[key]
    memo[word] = res
    return res


def symbol_of_iterint(lower, letters, upper, memo: dict | None = None) -> Tensor:
    """Symbol tensor of the word (lower; letters...; upper).

    Entries may be Points (formal letters) or Fractions (numeric letters);
    both bounds and letters must be of the same kind.
    """
    word = (lower,) + tuple(letters) + (upper,)
    if memo is None:
        memo = {}
    return LinearCombination(_symbol_rec(word, memo, _letter_fn_for(word)))


# ---------------------------------------------------------------------------
# Goncharov coproduct, and the symbol computed through it (oracle)
# ---------------------------------------------------------------------------


def goncharov_coproduct(lower, letters, upper) -> LinearCombination:
    """Full coproduct of a word, as (main word, product-of-subwords) terms.

    Terms are keyed by the pair (main, factors): the main word keeps the
    chosen letters between the original bounds, and each gap contributes
    the cut-out subword (with its cut points as bounds) to the right-hand
    product.  Weight-0 factors are the unit and are not recorded, so a
    weight-1 word yields exactly  t (x) 1 + 1 (x) t.
    """
    letters = tuple(letters)
    n = len(letters)
    word = (lower,) + letters + (upper,)
    out = LinearCombination()
    for k in range(n + 1):
        for subset in itertools.combinations(range(1, n + 1), k):
            idx = (0,) + subset + (n + 1,)
            main = (word[0],) + tuple(word[i] for i in subset) + (word[-1],)
            factors = tuple(
                word[idx[p] : idx[p + 1] + 1]
                for p in range(len(idx) - 1)
                if idx[p + 1] - idx[p] > 1
            )
            out.add_items([((main, factors), Fraction(1))])
    return out


def symbol_via_coproduct(lower, letters, upper, memo: dict | None = None) -> Tensor:
    """Alternative symbol computation, iterating the (1, n-1) coproduct cut.

    The first slot comes from the weight-one main term I(a0; ai; a(n+1));
    the remaining slots interleave the symbols of the two complementary
    subwords (a product, hence a shuffle at symbol level).  Coassociativity
    makes this equal to `symbol_of_iterint`; the recursion tree is entirely
    different, which is what makes it useful as a cross-check.
    """
    word = (lower,) + tuple(letters) + (upper,)
    if memo is None:
        memo = {}
    letter_fn = _letter_fn_for(word)

    def rec(w: tuple) -> dict:
        cached = memo.get(w)
        if cached is not None:
            return cached
        m = len(w) - 2
        if m == 0:
            res = {(): Fraction(1)}
        else:
            res = {}
            for i in range(1, m + 1):
                first = letter_fn(w[0], w[i], w[-1])
                if first is None:
                    continue
                left = rec(w[: i + 1])
                right = rec(w[i:])
                for ltup, lc in left.items():
                    for rtup, rc in right.items():
                        c = lc * rc
                        for mix, mult in shuffle_letter_seqs(ltup, rtup).items():
                            key = (first,) + mix
                            nc = res.get(key, 0) + c * mult
                            if nc:
                                res[key] = nc
                            elif key in res:
                                del res[key]
        memo[w] = res
        return res

    return LinearCombination(rec(word))


# ---------------------------------------------------------------------------
# Projector and cobracket
# ---------------------------------------------------------------------------

_PI_PATTERNS: dict[int, tuple] = {}


def _pi_pattern(w: int) -> tuple:
    """Pi_w as a universal signed combination of slot permutations."""
    cached = _PI_PATTERNS.get(w)
    if cached is not None:
        return cached
    if w == 1:
        pat = (((0,), Fraction(1)),)
    else:
        prev = _pi_pattern(w - 1)
        f = Fraction(w - 1, w)
        acc: dict[tuple, Fraction] = {}
        for perm, c in prev:
            k1 = perm + (w - 1,)
            acc[k1] = acc.get(k1, 0) + f * c
            k2 = tuple(p + 1 for p in perm) + (0,)
            acc[k2] = acc.get(k2, 0) - f * c
        pat = tuple(sorted((k, v) for k, v in acc.items() if v))
    _PI_PATTERNS[w] = pat
    return pat


def _uniform_weight(T: LinearCombination) -> int:
    w = None
    for tup in T.terms():
        if w is None:
            w = len(tup)
        elif len(tup) != w:
            raise ValueError("tensor mixes weights")
    if w is None:
        raise ValueError("cannot project the zero tensor without a weight")
    return w


def pi_project(T: Tensor) -> Tensor:
    """Apply the projector that annihilates shuffle products.

    Pi_1 = id;  Pi_w(a1 (x) ... (x) aw) = (w-1)/w * (
    Pi_{w-1}(a1..a_{w-1}) (x) aw  -  Pi_{w-1}(a2..aw) (x) a1 ).
    """
    if not T:
        return LinearCombination()
    pattern = _pi_pattern(_uniform_weight(T))
    out: dict = {}
    for tup, c in T.items():
        for perm, pc in pattern:
            key = tuple(tup[i] for i in perm)
            nc = out.get(key, 0) + c * pc
            if nc:
                out[key] = nc
            elif key in out:
                del out[key]
    return LinearCombination(out)


_DELTA_PATTERNS: dict[tuple, tuple] = {}


def _delta_pattern(w: int, k: int) -> tuple:
    """Slot pattern of Pi_k (x) Pi_{w-k} acting on a weight-w tuple."""
    cached = _DELTA_PATTERNS.get((w, k))
    if cached is not None:
        return cached
    left = _pi_pattern(k)
    right = _pi_pattern(w - k)
    pat = tuple(
        (lperm + tuple(p + k for p in rperm), lc * rc)
        for lperm, lc in left
        for rperm, rc in right
    )
    _DELTA_PATTERNS[(w, k)] = pat
    return pat


def delta_cobracket(T: Tensor) -> LinearCombination:
    """Cobracket: sum over cuts of Pi_{w-k}(back) wedge Pi_k(front), keeping
    only the cuts where both factors have weight >= 2.  This orientation is
    the one under which the depth-two closed forms take their usual shape,
    e.g. the weight-five double with a single trailing index maps to
    - <2-part of x> ^ <3-part of y> + <3-part of x> ^ <2-part of y>.

    Dropping the (1, w-1) and (w-1, 1) cuts is what makes classical
    depth-one functions invisible: their cobracket lives entirely in the
    weight (w-1, 1) component.  At weight 4 the surviving map is the
    familiar a (x) b (x) c (x) d  ->  (a ^ b) ^ (c ^ d); below weight 4
    nothing survives at all.

    The result lives in the wedge square; a wedge u ^ v is stored as both
    ordered pieces,  (k, u+v) with +c  and  (w-k, v+u) with -c,  where the
    tag is the weight of the first factor.  This representation is faithful
    (no canonical-ordering subtleties), at the cost of doubling the entry
    count.
    """
    if not T:
        return LinearCombination()
    w = _uniform_weight(T)
    out: dict = {}
    for k in range(2, w - 1):
        pattern = _delta_pattern(w, k)
        for tup, c in T.items():
            for perm, pc in pattern:
                ab = tuple(tup[i] for i in perm)
                for key, val in (
                    ((k, ab), -c * pc),
                    ((w - k, ab[k:] + ab[:k]), c * pc),
                ):
                    nc = out.get(key, 0) + val
                    if nc:
                        out[key] = nc
                    elif key in out:
                        del out[key]
    return LinearCombination(out)


def wedge_tensors(A: Tensor, B: Tensor) -> LinearCombination:
    """A ^ B in the same keyed representation as delta_cobracket."""
    out = LinearCombination()
    items = []
    for a, ca in A.items():
        for b, cb in B.items():
            items.append(((len(a), a + b), ca * cb))
            items.append(((len(b), b + a), -ca * cb))
    out.add_items(items)
    return out


# ---------------------------------------------------------------------------
# Specialization of points to exact rationals
# ---------------------------------------------------------------------------


class Specialization:
    """An assignment of distinct generic rationals to variable names.

    Values are required to be pairwise distinct and different from 0 and 1;
    together with the point constants this keeps every cross-ratio of
    distinct points away from {0, 1, infinity}.
    """

    def __init__(self, assignment: dict[str, Fraction]):
        vals = {}
        for name, v in assignment.items():
            v = Fraction(v)
            if v in (0, 1):
                raise GenericityError(f"{name} = {v} collides with a constant")
            vals[name] = v
        if len(set(vals.values())) != len(vals):
            raise GenericityError("assigned values must be pairwise distinct")
        self.assignment = vals

    def var(self, name: str) -> Fraction:
        return self.assignment[name]

    def point(self, p: Point) -> Fraction | None:
        if p.kind == "var":
            return self.assignment[p.name]
        if p.kind == "zero":
            return Fraction(0)
        if p.kind == "one":
            return Fraction(1)
        return None  # infinity

    @classmethod
    def draw(cls, names, rng: random.Random) -> "Specialization":
        """Draw distinct random rationals with small numerator/denominator."""
        assignment: dict[str, Fraction] = {}
        used = {Fraction(0), Fraction(1)}
        for name in sorted(names):
            for _ in range(64):
                v = Fraction(rng.randint(2, 97), rng.randint(2, 97))
                if v not in used:
                    break
            else:  # pragma: no cover - 64 misses out of ~5000 values
                raise GenericityError("could not draw distinct values")
            used.add(v)
            assignment[name] = v
        return cls(assignment)

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.assignment.items()))
        return f"Specialization({inner})"


def _hterm_word(t: HTerm, spec: Specialization) -> tuple:
    vals = [spec.point(p) for p in (t.lower, *t.letters, t.upper)]
    xv = spec.point(t.xslot)
    if xv is None:
        if any(v is None for v in vals):
            raise GenericityError(f"infinite entry in {t} with x already infinite")
        word = tuple(vals)
    else:
        word = tuple(
            Fraction(0) if v is None else 1 / (v - xv) for v in vals
        )
    if word[0] == word[1] or word[-1] == word[-2]:
        raise GenericityError(f"specialized word of {t} is divergent")
    return word


def _mpl_word(t: MplTerm, spec: Specialization) -> tuple:
    zs = []
    for arg in t.args:
        try:
            if isinstance(arg, CrossRatio):
                z = arg.value(spec.point)
            else:
                z = arg.value(spec.var)
        except DegenerateCrossRatioError as exc:
            raise GenericityError(str(exc)) from exc
        if z in (0, 1):
            raise GenericityError(f"argument {arg} evaluates to {z}")
        zs.append(z)
    if len(set(zs)) != len(zs):
        raise GenericityError(f"arguments of {t} collide numerically")
    word: list = [Fraction(0)]
    for s, z in zip(t.indices, zs):
        word.append(z)
        word.extend([Fraction(0)] * (s - 1))
    word.append(Fraction(1))
    return tuple(word)


def specialize(expr, spec: Specialization, memo: dict | None = None) -> Tensor:
    """Symbol of an expression after assigning rational values to points.

    Accepts a LinearCombination of HTerm and/or MplTerm (or a single such
    term).  Hyperlogarithm terms are specialized directly: when the x slot
    is finite the whole word is moved through t -> 1/(t - x) first.  This
    route is independent of the cross-ratio rewriting in mplred.mpl, which
    is exactly what makes the two comparable in tests.
    """
    if isinstance(expr, (HTerm, MplTerm)):
        expr = LinearCombination.single(expr)
    if memo is None:
        memo = {}
    out: dict = {}
    for term, coeff in expr.items():
        if isinstance(term, HTerm):
            word = _hterm_word(term, spec)
        elif isinstance(term, MplTerm):
            word = _mpl_word(term, spec)
        else:
            raise TypeError(f"cannot specialize {term!r}")
        for tup, c in _symbol_rec(word, memo, _value_letter).items():
            nc = out.get(tup, 0) + c * coeff
            if nc:
                out[tup] = nc
            elif tup in out:
                del out[tup]
    return LinearCombination(out)


# ---------------------------------------------------------------------------
# Expansion of letters into atoms, and the exact zero test
# ---------------------------------------------------------------------------

_FRACTION_ATOMS: dict[Fraction, tuple] = {}
_ATOM_IDS: dict = {}
_ATOMS: list = []


def _atom_id(atom) -> int:
    aid = _ATOM_IDS.get(atom)
    if aid is None:
        aid = len(_ATOMS)
        _ATOM_IDS[atom] = aid
        _ATOMS.append(atom)
    return aid


def atom_by_id(aid: int):
    return _ATOMS[aid]


def _factor_positive(n: int) -> dict:
    from sympy import factorint

    return factorint(n)


def letter_atoms(letter) -> tuple:
    """The letter as a tuple of (atom id, exponent), cached per letter."""
    if isinstance(letter, Letter):
        return tuple((_atom_id(a), e) for a, e in letter.atoms)
    v = letter
    cached = _FRACTION_ATOMS.get(v)
    if cached is None:
        if v <= 0:
            raise ValueError(f"letters must be positive, got {v}")
        atoms = [(_atom_id(("p", p)), e) for p, e in _factor_positive(v.numerator).items()]
        atoms += [
            (_atom_id(("p", p)), -e) for p, e in _factor_positive(v.denominator).items()
        ]
        cached = tuple(sorted(atoms))
        _FRACTION_ATOMS[v] = cached
    return cached


def _tagged_items(T: LinearCombination):
    # Plain tensors are keyed by letter tuples; delta images by (tag, tuple).
    for key, c in T.items():
        if len(key) == 2 and isinstance(key[0], int) and isinstance(key[1], tuple):
            yield (key[0],), key[1], c
        else:
            yield (), key, c


def expand_atoms(T: LinearCombination) -> LinearCombination:
    """Fully multilinear expansion into atom-id tuples (small inputs only)."""
    out: dict = {}
    for tag, tup, coeff in _tagged_items(T):
        partial = [(tag, coeff)]
        for letter in tup:
            atoms = letter_atoms(letter)
            partial = [(key + (aid,), c * e) for key, c in partial for aid, e in atoms]
        for key, c in partial:
            nc = out.get(key, 0) + c
            if nc:
                out[key] = nc
            elif key in out:
                del out[key]
    return LinearCombination(out)


# Interning table: each distinct atom tuple (the factorisation of one
# letter) gets a small integer id, so the expansion below works on tuples
# of plain ints throughout.
_PATTERN_IDS: dict[tuple, int] = {}
_PATTERNS: list[tuple] = []


def zero_after_expansion(T: LinearCombination) -> tuple[bool, int]:
    """Expand letters into atoms depth first; return (is zero, residue size).

    Expanding one slot multiplies the entry count by the atoms per letter,
    and a breadth-first sweep holds every partially expanded entry at once;
    at weight five that is gigabytes before the cancellations at the final
    level collapse it.  Grouping entries by the atom just produced and
    finishing one group at a time performs the same exact integer
    arithmetic with peak memory bounded by a single expanded slot plus one
    recursion path.  Coefficients are rescaled to integers (zero-ness does
    not care) and letters interned to atom-pattern ids so the hot merging
    loop works on int tuples; raw Fraction keys are an order of magnitude
    slower here.
    """
    if not T:
        return (True, 0)
    denom = 1
    for _, c in T.items():
        d = c.denominator
        denom = denom * d // gcd(denom, d)
    pattern_ids = _PATTERN_IDS
    patterns = _PATTERNS
    # Letters repeat heavily inside one tensor; id() keys avoid rehashing
    # Fractions.  All letter objects stay alive through T for the loop.
    seen_obj: dict[int, int] = {}
    groups: dict[tuple, dict] = {}
    for tag, tup, coeff in _tagged_items(T):
        pids = []
        for letter in tup:
            pid = seen_obj.get(id(letter))
            if pid is None:
                atoms = letter_atoms(letter)
                pid = pattern_ids.get(atoms)
                if pid is None:
                    pid = len(patterns)
                    pattern_ids[atoms] = pid
                    patterns.append(atoms)
                seen_obj[id(letter)] = pid
            pids.append(pid)
        group = groups.setdefault(tag, {})
        key = tuple(pids)
        nc = group.get(key, 0) + int(coeff * denom)
        if nc:
            group[key] = nc
        elif key in group:
            del group[key]
    residue = 0
    for tag in sorted(groups):
        residue += _expand_residue(groups.pop(tag), patterns)
    return (residue == 0, residue)


def _expand_residue(entries: dict, patterns: list) -> int:
    """Count nonzero entries in the full atom expansion of `entries`.

    `entries` maps equal-length tuples of pattern ids to nonzero integer
    coefficients.  The first slot is expanded into its atoms, entries are
    regrouped by that atom (merging equal remainders), and each group is
    completed recursively before the next one starts, so groups that
    cancel are built and freed one at a time.
    """
    residue = 1 if entries.pop((), None) is not None else 0
    if not entries:
        return residue
    buckets: dict[int, dict] = {}
    for suf, c in entries.items():
        rest = suf[1:]
        for aid, e in patterns[suf[0]]:
            bucket = buckets.get(aid)
            if bucket is None:
                bucket = buckets[aid] = {}
            nc = bucket.get(rest, 0) + c * e
            if nc:
                bucket[rest] = nc
            elif rest in bucket:
                del bucket[rest]
    entries.clear()
    for aid in sorted(buckets):
        residue += _expand_residue(buckets.pop(aid), patterns)
    return residue


# ---------------------------------------------------------------------------
# Verdicts and the equality checks
# ---------------------------------------------------------------------------


@dataclass
class TrialResult:
    trial: int
    draw_seed: int
    ok: bool
    residue: int

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "draw_seed": self.draw_seed,
            "ok": self.ok,
            "residue": self.residue,
        }


@dataclass
class Verdict:
    name: str
    level: str
    trials: int
    seed: int
    ok: bool
    results: list

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "level": self.level,
            "trials": self.trials,
            "seed": self.seed,
            "ok": self.ok,
            "results": [r.to_json() for r in self.results],
        }

    def __bool__(self) -> bool:
        return self.ok


def collect_variable_names(*exprs) -> set:
    names: set = set()
    for expr in exprs:
        if isinstance(expr, (HTerm, MplTerm)):
            terms = [expr]
        else:
            terms = list(expr.terms())
        for t in terms:
            if isinstance(t, HTerm):
                for p in (t.lower, *t.letters, t.xslot, t.upper):
                    if p.kind == "var":
                        names.add(p.name)
            elif isinstance(t, MplTerm):
                for arg in t.args:
                    if isinstance(arg, CrossRatio):
                        for p in arg.points:
                            if p.kind == "var":
                                names.add(p.name)
                    else:
                        for (kind, *vs), _e in arg.factors:
                            names.update(vs)
    return names


def _derive_seed(seed: int, trial: int, attempt: int) -> int:
    return (seed * 1_000_003 + trial) * 1_009 + attempt


def _check_equality(e1, e2, project, level, trials, seed, name) -> Verdict:
    names = collect_variable_names(e1, e2)
    if isinstance(e1, (HTerm, MplTerm)):
        e1 = LinearCombination.single(e1)
    if isinstance(e2, (HTerm, MplTerm)):
        e2 = LinearCombination.single(e2)
    diff = e1 - e2
    results = []
    all_ok = True
    for k in range(trials):
        tensor = None
        draw_seed = None
        for attempt in range(32):
            draw_seed = _derive_seed(seed, k, attempt)
            rng = random.Random(draw_seed)
            try:
                sp = Specialization.draw(names, rng)
                tensor = specialize(diff, sp)
                break
            except GenericityError:
                continue
        if tensor is None:
            raise GenericityError(
                f"no generic specialization found for {name or 'check'} (trial {k})"
            )
        ok, residue = zero_after_expansion(project(tensor)) if tensor else (True, 0)
        results.append(TrialResult(trial=k, draw_seed=draw_seed, ok=ok, residue=residue))
        all_ok = all_ok and ok
    return Verdict(
        name=name, level=level, trials=trials, seed=seed, ok=all_ok, results=results
    )


def equals_mod_sh(e1, e2, trials: int = 3, seed: int = 0, name: str = "") -> Verdict:
    """Check e1 = e2 modulo products: Pi(symbol of difference) must vanish."""
    return _check_equality(e1, e2, pi_project, "shuffle", trials, seed, name)


def equals_mod_delta(e1, e2, trials: int = 3, seed: int = 0, name: str = "") -> Verdict:
    """Check e1 = e2 modulo products and depth-one terms, via the cobracket."""
    return _check_equality(e1, e2, delta_cobracket, "cobracket", trials, seed, name)

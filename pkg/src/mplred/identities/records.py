"""Catalog of verified rewritings between multiple polylogarithms.

Each record names one identity, builds its two sides as expressions, and
declares the level at which they agree: ``"shuffle"`` for equality modulo
products (checked through the projected symbol) or ``"cobracket"`` for the
weaker equality modulo products and modulo terms killed by the cobracket.

The depth-lowering rules that the records exercise one at a time are also
exported as tables (`W4_RULES`, `W5_RULES`) keyed by index tuple; the
pipeline module applies them wholesale.  A rule row ``(coeff, indices,
patterns)`` is written over the formal points a,b,c,... of the term being
rewritten: a,b,c are its shared cross-ratio triple and d,e,f its tail
points, so instantiating a rule is just re-binding those letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..algebra import LinearCombination
from ..mpl import MplTerm, monomial
from ..symbolic import Verdict, equals_mod_delta, equals_mod_sh
from .golden import iter_rows, load_li5_expr, load_raw, rows_to_expr

__all__ = [
    "W4_RULES",
    "W5_RULES",
    "IdentityRecord",
    "catalog",
    "find",
    "verify_record",
]

F = Fraction

# --------------------------------------------------------------------------
# Depth-lowering rule tables
# --------------------------------------------------------------------------

#: weight 4: rewrite I_{2,2} and I_{1,3} in terms of I_{3,1} and I_4
W4_RULES = {
    (2, 2): [
        (F(-1), (1, 3), ("abcde",)),
        (F(-1), (1, 3), ("abced",)),
        (F(-1), (3, 1), ("abcde",)),
    ],
    (1, 3): [
        (F(1), (4,), ("abcd",)),
        (F(-1), (3, 1), ("badce",)),
    ],
}

#: weight 5: rewrite every index tuple except (3,1,1), (3,2), (5,)
W5_RULES = {
    (1, 3, 1): [(F(1), (3, 1, 1), ("abcfed",))],
    (2, 2, 1): [
        (F(-1), (3, 1, 1), (p,))
        for p in ("abcdef", "abcdfe", "abcfde", "abcfed")
    ],
    (1, 1, 3): (
        [(F(1), (3, 1, 1), ("abdcfe",))]
        + [(F(1, 3), (3, 2), (p,)) for p in ("abcef", "abecf", "abedf", "abefc")]
        + [(F(-1, 3), (3, 2), (p,)) for p in ("baefc", "baefd")]
        + [(F(1, 3), (3, 2), ("bafec",))]
        + [
            (F(c, 3), (5,), (p,))
            for c, p in ((-4, "abde"), (6, "abdf"), (-4, "abec"), (7, "abef"), (16, "abfc"))
        ]
    ),
    (2, 1, 2): (
        [
            (F(1), (3, 1, 1), (p,))
            for p in ("abcdfe", "abcfde", "abcfed", "abdcef", "abdecf", "abedcf")
        ]
        + [
            (F(c), (3, 2), (p,))
            for c, p in (
                (1, "abcdf"), (2, "abcef"), (-1, "abcfd"), (-1, "abcfe"),
                (1, "abdcf"), (1, "abdef"), (2, "abecf"), (1, "abedf"), (-1, "abefc"),
            )
        ]
        + [(F(c), (5,), (p,)) for c, p in ((12, "abcf"), (6, "abdf"), (12, "abef"))]
    ),
    (1, 2, 2): (
        [(F(-1), (3, 1, 1), (p,)) for p in ("abcfed", "abdcef", "abdcfe", "abdecf")]
        + [
            (F(c), (3, 2), (p,))
            for c, p in ((-2, "abcef"), (1, "abcfe"), (-2, "abecf"), (-1, "abefd"), (-1, "abfed"))
        ]
        + [
            (F(c), (5,), (p,))
            for c, p in ((-12, "abcf"), (-6, "abde"), (-6, "abdf"), (-6, "abef"))
        ]
    ),
    (2, 3): [(F(-1), (3, 2), ("badce",)), (F(1), (5,), ("abcd",))],
    (1, 4): [(F(-1), (4, 1), ("badce",)), (F(1), (5,), ("abcd",))],
    (4, 1): [(F(-1, 3), (3, 2), ("abcde",)), (F(-1, 3), (3, 2), ("abced",))],
}


# --------------------------------------------------------------------------
# Records
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityRecord:
    """One verifiable identity: build() returns the two sides to compare."""

    name: str
    level: str  # "shuffle" or "cobracket"
    description: str
    build: Callable[[], tuple]


def _rule_identity(indices, pattern="abcdef"):
    """lhs = one bracket term, rhs = its rule image (same letters)."""
    rules = W4_RULES if sum(indices) == 4 else W5_RULES

    def build():
        lhs = rows_to_expr([(F(1), indices, (pattern[: 3 + len(indices)],))])
        rhs = rows_to_expr(rules[indices])
        return lhs, rhs

    return build


def _zero_identity(rows):
    def build():
        return rows_to_expr(rows), LinearCombination()

    return build


def _pair(lhs_rows, rhs_rows):
    def build():
        return rows_to_expr(lhs_rows), rows_to_expr(rhs_rows)

    return build


# two-variable monomial arguments
_X = monomial(x=1)
_Y = monomial(y=1)
_INV_X = monomial(x=-1)
_INV_Y = monomial(y=-1)
_X_OVER_Y = monomial(x=1, y=-1)
_Y_OVER_X = monomial(x=-1, y=1)


def _mono(coeff, indices, *args):
    return (LinearCombination.single(MplTerm(indices, args)), F(coeff))


def _mono_expr(*rows):
    out = LinearCombination()
    for lc, c in rows:
        out.add_scaled(lc, c)
    return out


def _build_i31_swap():
    lhs = rows_to_expr([(F(1), (3, 1), ("abcde",))])
    rhs = rows_to_expr([(F(1, 2), (2, 2), ("abced",)), (F(-1, 2), (2, 2), ("abcde",))])
    return lhs, rhs


def _build_i4_inversion():
    return (
        _mono_expr(_mono(1, (4,), _X)),
        _mono_expr(_mono(-1, (4,), _INV_X)),
    )


def _build_i3_inversion():
    return (
        _mono_expr(_mono(1, (3,), _INV_Y)),
        _mono_expr(_mono(1, (3,), _Y)),
    )


def _build_stuffle_23():
    lhs = _mono_expr(
        _mono(1, (2, 3), _X, _Y),
        _mono(1, (3, 2), _X, _X_OVER_Y),
    )
    rhs = _mono_expr(_mono(1, (5,), _X))
    return lhs, rhs


def _build_i32_via_i41():
    lhs = _mono_expr(_mono(1, (3, 2), _X, _Y))
    rhs = _mono_expr(
        _mono(F(-3, 2), (4, 1), _X, _Y),
        _mono(F(-1, 2), (4, 1), _X, _INV_Y),
        _mono(F(-1, 2), (4, 1), _X, _X_OVER_Y),
        _mono(F(-1, 2), (4, 1), _X, _Y_OVER_X),
        _mono(F(1, 2), (4, 1), _Y, _X_OVER_Y),
        _mono(F(1, 2), (4, 1), _Y, _Y_OVER_X),
    )
    return lhs, rhs


def _build_i311_via_i32():
    data = load_raw("i311_to_i32")
    lhs = rows_to_expr([(F(data["lhs_scale"]), (3, 1, 1), ("abcdef",))])
    rhs = rows_to_expr(list(iter_rows(data)))
    return lhs, rhs


def _build_appendix_li5():
    lhs = _mono_expr(
        _mono(F(22, 9), (3, 2), _X, _Y),
        _mono(F(11, 9), (4, 1), _X, _INV_Y),
        _mono(F(11, 9), (4, 1), _X, _X_OVER_Y),
        _mono(F(11, 9), (4, 1), _X, _Y_OVER_X),
        _mono(F(33, 9), (4, 1), _X, _Y),
        _mono(F(-11, 9), (4, 1), _Y, _X_OVER_Y),
        _mono(F(-11, 9), (4, 1), _Y, _Y_OVER_X),
    )
    return lhs, load_li5_expr()


_GANGL_AB = (
    [(F(1), (3, 1), ("abcde",)), (F(-1), (3, 1), ("bacde",))]
    + [(F(c), (4,), (p,)) for c, p in ((-1, "abcd"), (1, "abce"), (3, "abde"))]
)

_GANGL_BC = (
    [(F(1), (3, 1), ("abcde",)), (F(-1), (3, 1), ("acbde",))]
    + [
        (F(c), (4,), (p,))
        for c, p in ((1, "cbad"), (-1, "cbae"), (2, "abde"), (2, "cade"), (1, "cbde"))
    ]
)

_GANGL_DE = [(F(1), (3, 1), ("abcde",)), (F(1), (3, 1), ("abced",))]

_GANGL_CYC = (
    [(F(1), (3, 1), (p,)) for p in ("abcde", "bcdae", "cdabe", "dabce")]
    + [
        (F(c), (4,), (p,))
        for c, p in (
            (1, "acbe"), (1, "bdce"), (1, "cade"), (1, "dbae"),
            (2, "abde"), (2, "bcae"), (2, "cdbe"), (2, "dace"),
        )
    ]
)


def catalog() -> tuple[IdentityRecord, ...]:
    """All shipped identities, in reporting order."""
    sh = "shuffle"
    co = "cobracket"
    return (
        IdentityRecord(
            "i22_to_i13_i31", sh,
            "coupled I_{2,2} as a combination of I_{1,3} and I_{3,1}",
            _rule_identity((2, 2), "abcde"),
        ),
        IdentityRecord(
            "i13_to_i4_i31", sh,
            "coupled I_{1,3} as I_4 minus a transposed I_{3,1}",
            _rule_identity((1, 3), "abcde"),
        ),
        IdentityRecord(
            "i31_swap", sh,
            "argument swap of coupled I_{3,1} via half the I_{2,2} difference",
            _build_i31_swap,
        ),
        IdentityRecord(
            "gangl_ab", sh,
            "functional equation for I_{3,1}: exchange of the first two points",
            _zero_identity(_GANGL_AB),
        ),
        IdentityRecord(
            "gangl_bc", sh,
            "functional equation for I_{3,1}: exchange of the second and third points",
            _zero_identity(_GANGL_BC),
        ),
        IdentityRecord(
            "gangl_de", sh,
            "functional equation for I_{3,1}: antisymmetry in the two tail points",
            _zero_identity(_GANGL_DE),
        ),
        IdentityRecord(
            "gangl_cyc", sh,
            "functional equation for I_{3,1}: four-fold cyclic sum",
            _zero_identity(_GANGL_CYC),
        ),
        IdentityRecord(
            "i4_inversion", sh,
            "I_4(x) = -I_4(1/x)",
            _build_i4_inversion,
        ),
        IdentityRecord(
            "i3_inversion", sh,
            "I_3(1/y) = I_3(y)",
            _build_i3_inversion,
        ),
        IdentityRecord(
            "stuffle_23", sh,
            "stuffle: I_{2,3}(x,y) + I_{3,2}(x,x/y) = I_5(x) modulo products",
            _build_stuffle_23,
        ),
        IdentityRecord(
            "interchange_23", sh,
            "index interchange for coupled I_{2,3} via I_{3,2} and I_5",
            _rule_identity((2, 3), "abcde"),
        ),
        IdentityRecord(
            "interchange_14", sh,
            "index interchange for coupled I_{1,4} via I_{4,1} and I_5",
            _rule_identity((1, 4), "abcde"),
        ),
        IdentityRecord(
            "i41_to_i32", sh,
            "coupled I_{4,1} as -1/3 of a two-term I_{3,2} sum",
            _rule_identity((4, 1), "abcde"),
        ),
        IdentityRecord(
            "i131_to_i311", sh,
            "coupled I_{1,3,1} as a reindexed I_{3,1,1}",
            _rule_identity((1, 3, 1)),
        ),
        IdentityRecord(
            "i221_to_i311", sh,
            "coupled I_{2,2,1} as a four-term I_{3,1,1} sum",
            _rule_identity((2, 2, 1)),
        ),
        IdentityRecord(
            "i113_to_i311_i32", sh,
            "coupled I_{1,1,3} via I_{3,1,1}, I_{3,2} and I_5",
            _rule_identity((1, 1, 3)),
        ),
        IdentityRecord(
            "i212_to_i311_i32", sh,
            "coupled I_{2,1,2} via I_{3,1,1}, I_{3,2} and I_5",
            _rule_identity((2, 1, 2)),
        ),
        IdentityRecord(
            "i122_to_i311_i32", sh,
            "coupled I_{1,2,2} via I_{3,1,1}, I_{3,2} and I_5",
            _rule_identity((1, 2, 2)),
        ),
        IdentityRecord(
            "i32_via_i41", co,
            "I_{3,2}(x,y) as an I_{4,1} combination, modulo the cobracket kernel",
            _build_i32_via_i41,
        ),
        IdentityRecord(
            "i311_via_i32", co,
            "3 I_{3,1,1} as a fifty-term I_{3,2} combination, modulo the cobracket kernel",
            _build_i311_via_i32,
        ),
        IdentityRecord(
            "appendix_li5", sh,
            "depth-two weight-five combination as 141 classical Li_5 values",
            _build_appendix_li5,
        ),
    )


def find(name: str) -> IdentityRecord:
    for rec in catalog():
        if rec.name == name:
            return rec
    raise KeyError(name)


def verify_record(rec: IdentityRecord, trials: int = 3, seed: int = 0) -> Verdict:
    lhs, rhs = rec.build()
    check = equals_mod_sh if rec.level == "shuffle" else equals_mod_delta
    return check(lhs, rhs, trials=trials, seed=seed, name=rec.name)

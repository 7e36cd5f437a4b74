"""Published braid words and polynomials used by ``verify-paper`` and the tests."""

from __future__ import annotations

from .braidword import BraidWord, parse_braid
from .polyring import IntPoly, parse_intpoly

# 5-strand word whose (ww*)^2 closure has Conway lead 72
FIGURE2_WORD = "1 1 2 -1 2 1 -3 2 4 -3 4 4"
FIGURE2_FACTORED = ("1 + z^2", "1 + z^2", "1 + 3*z^2", "1 + 3*z^2", "1 - 11*z^2 + 33*z^4 + 8*z^6")
FIGURE2_CONWAY = "1 - 3*z^2 - 33*z^4 + 54*z^6 + 535*z^8 + 869*z^10 + 489*z^12 + 72*z^14"
FIGURE2_MOD4_FACTORS = ("1 - z + z^2", "1 + z + z^2", "1 + z^4", "1 + z^4")

PRIME_LEAD_WORD = "1 1 2 -1 -3 -2 1 4 3 2 2 3 3 4"
PRIME_LEAD_CONWAY = (
    "1 + 5*z^2 + 39*z^4 + 246*z^6 + 657*z^8 + 743*z^10 + 301*z^12"
    " - 78*z^14 - 105*z^16 - 31*z^18 - 3*z^20"
)

# 19-crossing knot known only through its DT code; the polynomial is taken literally
DT_KNOT_CODE = (6, -12, 32, -18, -26, 16, -4, -22, 34, -38, 30, -14, 20, 36, -10, 24, 2, 28, -8)
DT_KNOT_CONWAY = "1 + 3*z^2 + 8*z^4"
DT_KNOT_MOD4_FACTORS = ("1 - z", "1 + z")

EHW_FACTORS = ("4*z^8 + 16*z^6 + 12*z^4 - 16*z^2 + 1", "1 + z", "1 - z", "2*z^4 - 1", "2*z^4 - 1")
EHW_MOD4_FACTORS = ("1 + z", "1 - z", "2*z^4 - 1", "2*z^4 - 1")

# (word, expected lead of the Conway polynomial of (ww*)^2), all on 5 strands
LEAD_TABLE = (
    ("1 1 2 -1 -3 -2 1 4 3 2 2 3 3 4", -3),
    ("1 -2 3 -2 -1 -2 -4 3 -2 3 -4 -4 -4 -4", 5),
    ("1 2 -3 4 4 4 -3 -2 -1 -3 -2 -3 4 -3 2 -3 4 -3", -7),
    ("1 -2 -3 4 -3 2 -1 -3 -3 -4 3 2 2 -4 -3 2", -11),
    ("1 2 3 4 3 3 3 3 -2 -1 2 -3 -3 2 2 3 -4 3", 13),
    ("1 -2 -2 3 -2 -4 -4 3 -2 -1 -2 -4 3 -2", 17),
)


def word(text: str, strands: int = 5) -> BraidWord:
    return parse_braid(text, strands)


def product(factors) -> IntPoly:
    out = IntPoly([1])
    for f in factors:
        out = out * parse_intpoly(f)
    return out


def ehw_conway() -> IntPoly:
    return product(EHW_FACTORS)

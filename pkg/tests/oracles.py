"""Independent brute-force and symbolic oracles, kept apart from the code they check."""

from fractions import Fraction
from itertools import product

import sympy

from burauconway.polyring import IntPoly, LaurentPoly

t_sym = sympy.Symbol("t")


def laurent_to_sympy(p: LaurentPoly):
    return sum(c * t_sym ** e for e, c in p.terms().items()) if not p.is_zero() else sympy.Integer(0)


def sympy_to_laurent(expr, shift: int = 400) -> LaurentPoly:
    poly = sympy.Poly(sympy.cancel(expr * t_sym ** shift), t_sym)
    return LaurentPoly([int(c) for c in reversed(poly.all_coeffs())], -shift)


def sympy_matrix(m):
    return sympy.Matrix([[laurent_to_sympy(x) for x in row] for row in m.rows])


def sympy_det(m) -> LaurentPoly:
    return sympy_to_laurent(sympy.cancel(sympy_matrix(m).det(method="berkowitz")))


def brute_split_mod4(c: IntPoly, max_deg: int):
    """Some f in Z_4[z] of degree <= max_deg with f(z)f(-z) = c mod 4, or None."""
    target = c.reduce_mod(4)
    for coeffs in product(range(4), repeat=max_deg + 1):
        f = IntPoly(coeffs)
        if (f * f.negate_var()).reduce_mod(4) == target:
            return f
    return None


def brute_is_square_mod4(p: IntPoly, max_deg: int) -> bool:
    target = p.reduce_mod(4)
    for coeffs in product(range(4), repeat=max_deg + 1):
        a = IntPoly(coeffs)
        if (a * a).reduce_mod(4) == target:
            return True
    return False


def t_to_z_numeric(p: LaurentPoly, c: IntPoly, samples=(2, 3, 5, Fraction(1, 2), Fraction(7, 3))) -> bool:
    """Check p(t) == c(z) at t = s^2, z = s - 1/s for several rational s."""
    for s in samples:
        s = Fraction(s)
        t = s * s
        lhs = sum(Fraction(coef) * t ** e for e, coef in p.terms().items())
        z = s - 1 / s
        rhs = sum(Fraction(coef) * z ** i for i, coef in enumerate(c.coeffs))
        if lhs != rhs:
            return False
    return True

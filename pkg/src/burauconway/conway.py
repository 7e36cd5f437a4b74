"""Conway polynomials of braid closures and the closed forms for 3-braid families."""

from __future__ import annotations

from math import isqrt

from .braidword import BraidWord, is_knot_closure, ww_star
from .burau import NotAKnot, alexander_from_matrix, alexander_of_closure, represent
from .lucasfib import fibonacci, lucas_to_z_of_symmetric
from .polyring import IntPoly


class ConwayError(ValueError):
    pass


class OddExponent(ConwayError):
    pass


class BadConstant(ConwayError):
    pass


class EvenInput(ConwayError):
    pass


Z2_PLUS_3 = IntPoly([3, 0, 1])


def check_conway(c: IntPoly) -> IntPoly:
    """Enforce the knot invariants: even exponents, constant term 1."""
    if not c.is_even():
        raise OddExponent(f"{c} has odd exponents")
    if c[0] != 1:
        raise BadConstant(f"{c} has constant term {c[0]}")
    return c


def conway_of_closure(w: BraidWord) -> IntPoly:
    return check_conway(lucas_to_z_of_symmetric(alexander_of_closure(w)))


def conway_of_ww_star(w: BraidWord, k: int = 1) -> IntPoly:
    """Conway polynomial of the closure of (w w*)^k.

    Uses a matrix power instead of expanding the word k times.
    """
    base = ww_star(w)
    if not is_knot_closure(ww_star(w, k)):
        raise NotAKnot(f"closure of ({w.pretty()} w*)^{k} is a link")
    alex = alexander_from_matrix(represent(base) ** k, w.strands)
    return check_conway(lucas_to_z_of_symmetric(alex))


def _require_odd(*vals: int) -> None:
    for v in vals:
        if v < 1 or v % 2 == 0:
            raise EvenInput(f"expected an odd positive integer, got {v}")


def phi(n: int, m: int) -> IntPoly:
    """4 - F_n^2 F_m^2 (z^2 + 3)."""
    _require_odd(n, m)
    return 4 - (fibonacci(n) * fibonacci(m)) ** 2 * Z2_PLUS_3


def three_braid_closed_form(n: int, m: int) -> IntPoly:
    """Conway polynomial of the closure of (s1^n s2^m s1^-n s2^-m)^2 in B_3."""
    _require_odd(n, m)
    return (fibonacci(n) * fibonacci(m)) ** 2 * phi(n, m)


def three_braid_word(n: int, m: int) -> BraidWord:
    """w = s1^n s2^m as a B_3 word."""
    return BraidWord(3, (1,) * n + (2,) * m)


def phi_split_1m(m: int) -> IntPoly:
    """p with p(z) p(-z) = phi(1, m): F_{m+1} + F_m + F_{m-1}."""
    _require_odd(m)
    return fibonacci(m + 1) + fibonacci(m) + fibonacci(m - 1)


def phi_split_mm(m: int) -> IntPoly:
    """p with p(z) p(-z) = phi(m, m): F_m^2 + F_2m - 2."""
    _require_odd(m)
    return fibonacci(m) ** 2 + fibonacci(2 * m) - 2


def formal_sqrt_in_zsq(c: IntPoly) -> IntPoly | None:
    """Return f in Z[x] with c(z) = f(z^2)^2, or None if there is none.

    Works on x = z^2 and solves for the coefficients of f from the bottom up;
    the sign of f is fixed by a positive lowest coefficient.
    """
    if c.is_zero():
        return IntPoly()
    if not c.is_even():
        return None
    q = c.halve_exponents().coeffs
    low = next(i for i, v in enumerate(q) if v)
    if low % 2:
        return None
    q = q[low:]
    if q[-1] < 0 or isqrt(q[-1]) ** 2 != q[-1] or (len(q) - 1) % 2:
        return None
    r0 = isqrt(q[0]) if q[0] > 0 else -1
    if r0 < 0 or r0 * r0 != q[0]:
        return None
    deg = (len(q) - 1) // 2
    f = [r0]
    for k in range(1, deg + 1):
        acc = q[k] - sum(f[i] * f[k - i] for i in range(1, k))
        if acc % (2 * r0):
            return None
        f.append(acc // (2 * r0))
    root = IntPoly(f)
    if root * root != IntPoly(q):
        return None
    return IntPoly([0] * (low // 2) + list(root.coeffs))


def z_split_lead_obstruction(c: IntPoly) -> bool:
    """True iff lead(c) = (-1)^(deg/2) * square, the leading-term shape of any f(z) f(-z)."""
    if c.is_zero():
        raise ValueError("zero polynomial")
    if c.degree % 2:
        return False
    d = c.degree // 2
    s = c.lead * (-1) ** d
    return s > 0 and isqrt(s) ** 2 == s

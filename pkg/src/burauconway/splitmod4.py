"""
Deciding C(z) = f(z) f(-z) in Z_4[z].

Mod 2 we have f(z) f(-z) = f(z)^2 = f(z^2), so f mod 2 is forced: it is the
Frobenius square root of C mod 2. Writing f = f0 + 2g, the correction term
2 (g(z) f0(-z) + f0(z) g(-z)) is linear in g over GF(2); the decision is
whether that linear map hits (C - f0(z) f0(-z)) / 2 mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .polyring import IntPoly


class SplitError(ValueError):
    pass


class OddResidual(ArithmeticError):
    pass


class EquivalenceViolation(AssertionError):
    pass


@dataclass(frozen=True)
class SplitWitness:
    f: IntPoly

    def product(self) -> IntPoly:
        return (self.f * self.f.negate_var()).reduce_mod(4)

    def certifies(self, c: IntPoly) -> bool:
        return (self.f * self.f.negate_var() - c).reduce_mod(4).is_zero()


@dataclass(frozen=True)
class Theorem11Report:
    """The three equivalent mod-4 conditions on a Conway polynomial."""

    cond_square: bool
    cond_congruence: bool
    cond_split: bool
    witness: SplitWitness | None = None

    @property
    def verdict(self) -> bool:
        return self.cond_split


@dataclass(frozen=True)
class ConjectureChecks:
    lead_is_square: bool
    sign_ok: bool


def sqrt_mod2(p: IntPoly) -> IntPoly | None:
    """The unique r in Z_2[z] with r^2 = p mod 2, or None."""
    bits = [c % 2 for c in p.coeffs]
    if any(bits[1::2]):
        return None
    return IntPoly(bits[::2])


def _to_bits(p: IntPoly) -> int:
    out = 0
    for i, c in enumerate(p.coeffs):
        if c % 2:
            out |= 1 << i
    return out


def gf2_solve(columns: list[int], target: int) -> list[int] | None:
    """x in GF(2)^k with XOR of columns[j] over x_j = 1 equal to target, or None.

    Vectors are int bitsets.
    """
    # pivots: bit -> (reduced vector, combination of original columns)
    pivots: dict[int, tuple[int, int]] = {}
    for j, col in enumerate(columns):
        vec, combo = col, 1 << j
        while vec:
            top = vec.bit_length() - 1
            if top not in pivots:
                pivots[top] = (vec, combo)
                break
            pv, pc = pivots[top]
            vec ^= pv
            combo ^= pc
    vec, combo = target, 0
    while vec:
        top = vec.bit_length() - 1
        if top not in pivots:
            return None
        pv, pc = pivots[top]
        vec ^= pv
        combo ^= pc
    return [(combo >> j) & 1 for j in range(len(columns))]


def split_mod4(c: IntPoly) -> SplitWitness | None:
    f0 = sqrt_mod2(c)
    if f0 is None:
        return None
    f0_neg = f0.negate_var()
    residual = c - f0 * f0_neg
    if any(x % 2 for x in residual.coeffs):
        raise OddResidual(f"{c} - f0(z)f0(-z) is not even")
    target = _to_bits(IntPoly([x // 2 for x in residual.coeffs]))
    deg = max(f0.degree, 0)
    columns = []
    for j in range(deg + 1):
        g = IntPoly.monomial(j)
        columns.append(_to_bits(g * f0_neg + f0 * g.negate_var()))
    x = gf2_solve(columns, target)
    if x is None:
        return None
    g = IntPoly(x)
    witness = SplitWitness((f0 + g * 2).reduce_mod(4))
    if not witness.certifies(c):
        raise OddResidual(f"lifted witness {witness.f} does not certify {c}")
    return witness


def is_square_mod4(p: IntPoly) -> bool:
    """Whether p = a^2 in Z_4[z].

    Since (a + 2b)^2 = a^2 mod 4, it suffices to square the 0/1 lift of the
    mod-2 square root.
    """
    a = sqrt_mod2(p)
    if a is None:
        return False
    return (a * a - p).reduce_mod(4).is_zero()


def _require_even(c: IntPoly) -> None:
    if not c.is_even():
        raise SplitError(f"{c} has odd exponents")


def c_of_iz(c: IntPoly) -> IntPoly:
    """C(iz) for an even C."""
    _require_even(c)
    return IntPoly([x if i % 4 == 0 else -x for i, x in enumerate(c.coeffs)])


def cond_congruence(c: IntPoly) -> bool:
    """C(z) C(iz) = C(z^2) mod 4."""
    return (c * c_of_iz(c) - c.scale_var(2)).reduce_mod(4).is_zero()


def cond_square(c: IntPoly) -> bool:
    """C(z) C(iz) C(z^2) is a square in Z_4[z^2]."""
    prod = c * c_of_iz(c) * c.scale_var(2)
    return is_square_mod4(prod.halve_exponents())


def theorem11_report(c: IntPoly) -> Theorem11Report:
    _require_even(c)
    if c[0] % 2 == 0:
        raise SplitError(f"{c} has even constant term")
    square = cond_square(c)
    congruence = cond_congruence(c)
    witness = split_mod4(c)
    report = Theorem11Report(square, congruence, witness is not None, witness)
    if not square == congruence == report.cond_split:
        raise EquivalenceViolation(f"conditions disagree on {c}: {report}")
    return report


def lead_coeff_restriction(c: IntPoly) -> bool:
    """lead = (-1)^n mod 4 or lead = 0 mod 4, where deg c = 2n."""
    if c.is_zero() or c.degree % 2:
        raise SplitError(f"{c} is not a nonzero polynomial of even degree")
    n = c.degree // 2
    r = c.lead % 4
    return r == 0 or r == (-1) ** n % 4


def conjecture_checks(c: IntPoly) -> ConjectureChecks:
    if c.is_zero():
        raise SplitError("zero polynomial")
    lead = c.lead
    square = isqrt(abs(lead)) ** 2 == abs(lead)
    sign_ok = c.degree % 2 == 0 and (lead > 0) == ((c.degree // 2) % 2 == 0)
    return ConjectureChecks(square, sign_ok)

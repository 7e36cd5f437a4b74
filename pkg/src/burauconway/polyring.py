"""
Exact polynomial arithmetic.

Three coefficient containers are provided, all immutable and built on
arbitrary-precision Python ints:

* ``IntPoly``     -- a polynomial in z with integer coefficients,
* ``LaurentPoly`` -- a Laurent polynomial in t (negative exponents allowed),
* ``LambdaPoly``  -- a polynomial in lambda whose coefficients are LaurentPolys.

Dense storage is used everywhere. Large products go through Kronecker
substitution (pack the coefficients into one big integer, multiply, unpack),
which keeps the Burau determinants of long braid words fast in pure Python.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence


class PolyError(ValueError):
    pass


class NonDivisible(PolyError):
    """Raised when an exact division leaves a nonzero remainder."""


class NotSymmetric(PolyError):
    """Raised when no unit multiple of a Laurent polynomial is palindromic."""


class PolyParseError(PolyError):
    pass


# ---------------------------------------------------------------------------
# dense coefficient-list helpers

def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


# below this size the schoolbook product beats packing into big ints
_KRONECKER_MIN = 12


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(abs(c) for c in a) * max(abs(c) for c in b) * min(len(a), len(b))
    bits = bound.bit_length() + 1
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, len(a) + len(b) - 1)


def _pack(coeffs: Sequence[int], bits: int) -> int:
    # Horner at x = 2**bits; negative coefficients are absorbed as borrows
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << bits) + c
    return acc


def _unpack(value: int, bits: int, length: int) -> list[int]:
    # inverse of _pack for balanced digits in (-2**(bits-1), 2**(bits-1)]
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(length):
        digit = value & mask
        if digit > half:
            digit -= 1 << bits
        out.append(digit)
        value = (value - digit) >> bits
    if value != 0:
        raise ArithmeticError("Kronecker unpacking overflow")
    return out


def _divmod_exact(p: Sequence[int], q: Sequence[int]) -> list[int] | None:
    """Quotient of p by q in Z[x] when the division is exact, else None."""
    if len(p) < len(q):
        return [] if not any(p) else None
    rem = list(p)
    lead = q[-1]
    nq = len(q)
    quot = [0] * (len(p) - nq + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + nq - 1]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            return None
        quot[k] = c
        for j in range(nq):
            rem[k + j] -= c * q[j]
    if any(rem):
        return None
    return quot


def _div_exact(p: Sequence[int], q: Sequence[int]) -> list[int] | None:
    if len(q) == 1:
        d = q[0]
        if any(c % d for c in p):
            return None
        return [c // d for c in p]
    if min(len(p) - len(q) + 1, len(q)) >= _KRONECKER_MIN:
        # fast path: divide the packed integers, then confirm by multiplying back
        # (coefficient bits of a factor are bounded by len + bits of the dividend)
        bits = max(abs(c) for c in p).bit_length() + len(p) + 2
        pp, qq = _pack(p, bits), _pack(q, bits)
        quo, rem = divmod(pp, qq)
        if rem == 0:
            try:
                cand = _unpack(quo, bits, len(p) - len(q) + 1)
            except ArithmeticError:
                cand = None
            if cand is not None and list(_trim(_mul(cand, q))) == list(_trim(p)):
                return cand
    return _divmod_exact(p, q)


# ---------------------------------------------------------------------------
# IntPoly

class IntPoly:
    """Integer polynomial in one variable; ``coeffs[i]`` is the coefficient of z**i."""

    __slots__ = ("coeffs",)
    var = "z"

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * exp + [coeff])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPoly":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(out)

    @classmethod
    def coerce(cls, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return cls([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        other = IntPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other):
        other = IntPoly.coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = IntPoly.coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return IntPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        other = IntPoly.coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def negate_var(self) -> "IntPoly":
        """p(-z)."""
        return IntPoly([-c if i & 1 else c for i, c in enumerate(self.coeffs)])

    def scale_var(self, k: int) -> "IntPoly":
        """p(z**k)."""
        if k < 1:
            raise ValueError("k must be positive")
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPoly(out)

    def halve_exponents(self) -> "IntPoly":
        """q with q(z**2) == p; p must have even exponents only."""
        if any(self.coeffs[1::2]):
            raise ValueError("polynomial has odd exponents")
        return IntPoly(self.coeffs[::2])

    def is_even(self) -> bool:
        return not any(self.coeffs[1::2])

    def reduce_mod(self, m: int) -> "IntPoly":
        return IntPoly([c % m for c in self.coeffs])

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(enumerate(self.coeffs), self.var)


def reduce_mod(p: IntPoly, m: int) -> IntPoly:
    """Reduce every coefficient into ``range(m)``."""
    return p.reduce_mod(m)


# ---------------------------------------------------------------------------
# LaurentPoly

class LaurentPoly:
    """Laurent polynomial in t: ``coeffs[i]`` is the coefficient of t**(low + i)."""

    __slots__ = ("low", "coeffs")
    var = "t"

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        coeffs = [int(c) for c in coeffs]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        coeffs = _trim(coeffs[start:])
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "low", low + start if coeffs else 0)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls([coeff], exp)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        out = [0] * (hi - lo + 1)
        for e, c in terms.items():
            out[e - lo] = c
        return cls(out, lo)

    @classmethod
    def coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls([other])
        return NotImplemented

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> int:
        i = e - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("LaurentPoly", self.low, self.coeffs))

    def _aligned(self, other: "LaurentPoly"):
        if not self.coeffs:
            return other.low, [], list(other.coeffs)
        if not other.coeffs:
            return self.low, list(self.coeffs), []
        low = min(self.low, other.low)
        a = [0] * (self.low - low) + list(self.coeffs)
        b = [0] * (other.low - low) + list(other.coeffs)
        return low, a, b

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        low, a, b = self._aligned(other)
        return LaurentPoly(_add(a, b), low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        low, a, b = self._aligned(other)
        return LaurentPoly(_sub(a, b), low)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(_mul(self.coeffs, other.coeffs), self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return LaurentPoly([self.coeffs[0] ** -k], self.low * k)
            raise ValueError("only units have negative powers")
        result, base = LaurentPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """t**k * p."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def invert_var(self) -> "LaurentPoly":
        """p(1/t)."""
        return LaurentPoly(reversed(self.coeffs), -self.high) if self.coeffs else self

    def __call__(self, t0):
        if isinstance(t0, int) and t0 in (1, -1):
            return self.eval_unit(t0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        if self.low >= 0:
            return acc * t0 ** self.low
        return Fraction(acc) / Fraction(t0) ** -self.low

    def eval_unit(self, t0: int) -> int:
        if t0 not in (1, -1):
            raise ValueError("t0 must be +1 or -1")
        if t0 == 1:
            return sum(self.coeffs)
        s = sum(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        return -s if self.low % 2 else s

    def is_symmetric(self) -> bool:
        """p(t) == p(1/t)."""
        return self.low == -self.high and self.coeffs == self.coeffs[::-1]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return self
        q = _div_exact(self.coeffs, other.coeffs)
        if q is None:
            raise NonDivisible(f"{other} does not divide {self}")
        return LaurentPoly(q, self.low - other.low)

    def balance(self) -> "LaurentPoly":
        """The unit multiple +-t**k * p that is palindromic about t**0, with q(1) > 0.

        When q(1) == 0 the sign is fixed by making the top coefficient positive.
        """
        if self.is_zero():
            raise NotSymmetric("zero polynomial")
        if self.span % 2 or self.coeffs != self.coeffs[::-1]:
            raise NotSymmetric(f"{self} is not a unit multiple of a palindrome")
        q = LaurentPoly(self.coeffs, -(self.span // 2))
        s = sum(q.coeffs)
        if s < 0 or (s == 0 and q.coeffs[-1] < 0):
            q = -q
        return q

    def to_intpoly(self) -> IntPoly:
        if self.low < 0:
            raise ValueError("negative exponents present")
        return IntPoly([0] * self.low + list(self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)}, low={self.low})"

    def __str__(self):
        return format_poly(((self.low + i, c) for i, c in enumerate(self.coeffs)), self.var)


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p.exact_div(q)


def balance(p: LaurentPoly) -> LaurentPoly:
    return p.balance()


def eval_unit(p: LaurentPoly, t0: int) -> int:
    return p.eval_unit(t0)


T = LaurentPoly([1], 1)
ONE = LaurentPoly([1])
ZERO = LaurentPoly()


# ---------------------------------------------------------------------------
# LambdaPoly

class LambdaPoly:
    """Polynomial in lambda with LaurentPoly coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[LaurentPoly] = ()):
        coeffs = [LaurentPoly.coerce(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("LambdaPoly", self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def at(self, lam: int) -> LaurentPoly:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def __repr__(self):
        return f"LambdaPoly({list(self.coeffs)!r})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("lambda" if k == 1 else f"lambda^{k}")
            parts.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# text format: "1 - 3*z^2 + 72*z^14", "t^-1 - 1 + t"

def format_poly(terms: Iterable[tuple[int, int]], var: str) -> str:
    out = []
    for e, c in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coeff>\d+)\s*(?P<star>\*)?\s*)?
        (?:(?P<var>[a-zA-Z])\s*(?:(?:\^|\*\*)\s*(?P<exp>[+-]?\s*\d+|\(\s*[+-]?\s*\d+\s*\)))?)?
        \s*""",
    re.VERBOSE,
)


def parse_terms(text: str, var: str) -> dict[int, int]:
    text = text.strip()
    if not text:
        raise PolyParseError("empty polynomial")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise PolyParseError(f"cannot parse {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise PolyParseError(f"missing operator before {text[pos:]!r}")
        if m.group("coeff") is None and m.group("var") is None:
            raise PolyParseError(f"dangling sign in {text!r}")
        if m.group("star") and m.group("var") is None:
            raise PolyParseError(f"dangling '*' in {text!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("sign") == "-":
            coeff = -coeff
        if m.group("var") is None:
            exp = 0
        else:
            if m.group("var") != var:
                raise PolyParseError(f"unexpected variable {m.group('var')!r}, expected {var!r}")
            raw = m.group("exp")
            exp = int(raw.strip("() ").replace(" ", "")) if raw else 1
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
        first = False
    return terms


def parse_intpoly(text: str, var: str = "z") -> IntPoly:
    terms = parse_terms(text, var)
    if any(e < 0 for e in terms):
        raise PolyParseError("negative exponent in an ordinary polynomial")
    return IntPoly.from_terms(terms)


def parse_laurent(text: str, var: str = "t") -> LaurentPoly:
    return LaurentPoly.from_terms(parse_terms(text, var))

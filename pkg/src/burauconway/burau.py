"""
The reduced Burau representation over Z[t, t^-1].

For B_n the image of sigma_i is an (n-1)x(n-1) matrix that differs from the
identity only in row i (1-based)::

    row i = (..., t, -t, 1, ...)      at columns i-1, i, i+1

with the entries at columns 0 and n clipped away for i = 1 and i = n-1.
For n = 2, sigma_1 maps to the 1x1 matrix (-t). Inverse generators have
row i equal to (1, -1/t, 1/t) at the same columns.

Words are multiplied out column-by-column, since right multiplication by a
generator only touches three columns.
"""

from __future__ import annotations

from typing import Sequence

from .braidword import BraidWord, is_knot_closure
from .polyring import ONE, ZERO, LambdaPoly, LaurentPoly

T = LaurentPoly([1], 1)
T_INV = LaurentPoly([1], -1)


class BurauError(ValueError):
    pass


class BadIndex(BurauError):
    pass


class NotAKnot(BurauError):
    pass


class InternalDivision(ArithmeticError):
    """An exact-division step of the characteristic polynomial failed."""


class BurauMatrix:
    """Square matrix over Z[t, t^-1], stored row-major as tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(LaurentPoly.coerce(x) for x in row) for row in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BurauMatrix is immutable")

    @classmethod
    def identity(cls, size: int) -> "BurauMatrix":
        return cls([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    @classmethod
    def from_columns(cls, cols) -> "BurauMatrix":
        size = len(cols)
        return cls([[cols[j][i] for j in range(size)] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, BurauMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "BurauMatrix") -> "BurauMatrix":
        return BurauMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "BurauMatrix") -> "BurauMatrix":
        return BurauMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return BurauMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "BurauMatrix":
        return BurauMatrix([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other: "BurauMatrix") -> "BurauMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return BurauMatrix(out)

    def __pow__(self, k: int) -> "BurauMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result, base = BurauMatrix.identity(self.size), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> LaurentPoly:
        acc = ZERO
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def __repr__(self):
        return "BurauMatrix(" + repr([[str(x) for x in r] for r in self.rows]) + ")"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def generator_matrix(i: int, n: int, inverse: bool = False) -> BurauMatrix:
    """Reduced Burau image of sigma_i (or its inverse) in B_n."""
    if n < 2:
        raise BadIndex(f"need n >= 2, got {n}")
    if not 1 <= i <= n - 1:
        raise BadIndex(f"generator index {i} out of range for B_{n}")
    cols = [[ONE if r == c else ZERO for r in range(n - 1)] for c in range(n - 1)]
    _right_mul_generator(cols, i if not inverse else -i)
    return BurauMatrix.from_columns(cols)


def _right_mul_generator(cols: list[list[LaurentPoly]], letter: int) -> None:
    """In place: M <- M * beta(letter), with M held as a list of columns."""
    size = len(cols)
    k = abs(letter) - 1
    ck = cols[k]
    if letter > 0:
        left, right, diag = T, ONE, T
    else:
        left, right, diag = ONE, T_INV, T_INV
    if k >= 1:
        prev = cols[k - 1]
        cols[k - 1] = [a + b * left for a, b in zip(prev, ck)]
    if k + 1 < size:
        nxt = cols[k + 1]
        cols[k + 1] = [a + b * right for a, b in zip(nxt, ck)]
    cols[k] = [-(b * diag) for b in ck]


def represent(w: BraidWord) -> BurauMatrix:
    """Ordered product of generator images along the word (identity for the empty word)."""
    size = w.strands - 1
    cols = [[ONE if r == c else ZERO for r in range(size)] for c in range(size)]
    for g in w.letters:
        _right_mul_generator(cols, g)
    return BurauMatrix.from_columns(cols)


# ---------------------------------------------------------------------------
# determinants

def det(m: BurauMatrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination; every division is exact."""
    n = m.size
    if n == 0:
        return ONE
    a = [list(r) for r in m.rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pivot - aik * a[k][j]
                a[i][j] = num.exact_div(prev) if prev != ONE else num
        prev = pivot
    return a[n - 1][n - 1] * sign


def det_cofactor(m: BurauMatrix) -> LaurentPoly:
    """Laplace expansion along the first row; only sensible for small sizes."""
    rows = [list(r) for r in m.rows]
    return _cofactor(rows)


def _cofactor(rows) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ZERO
    for j, x in enumerate(rows[0]):
        if x.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def char_poly(m: BurauMatrix) -> LambdaPoly:
    """det(lambda*I - M) via Faddeev-LeVerrier.

    The k-th step divides a trace by the integer k; by theory this is exact
    over Z[t, t^-1], and a remainder raises InternalDivision.
    """
    n = m.size
    coeffs: list[LaurentPoly] = [ZERO] * (n + 1)
    coeffs[n] = ONE
    identity = BurauMatrix.identity(n)
    mk = BurauMatrix.identity(n).scale(0)
    for k in range(1, n + 1):
        mk = (m @ mk) + identity.scale(coeffs[n - k + 1])
        tr = (m @ mk).trace()
        if any(c % k for c in tr.coeffs):
            raise InternalDivision(f"trace {tr} not divisible by {k}")
        coeffs[n - k] = -LaurentPoly([c // k for c in tr.coeffs], tr.low)
    return LambdaPoly(coeffs)


# ---------------------------------------------------------------------------
# Alexander polynomial

def strand_sum(n: int) -> LaurentPoly:
    """1 + t + ... + t^(n-1)."""
    return LaurentPoly([1] * n)


def det_i_minus(m: BurauMatrix) -> LaurentPoly:
    return det(BurauMatrix.identity(m.size) - m)


def det_i_plus(m: BurauMatrix) -> LaurentPoly:
    return det(BurauMatrix.identity(m.size) + m)


def alexander_from_matrix(m: BurauMatrix, strands: int) -> LaurentPoly:
    """Balanced Alexander polynomial from the Burau image of a knot-closing braid."""
    return det_i_minus(m).exact_div(strand_sum(strands)).balance()


def alexander_of_closure(w: BraidWord) -> LaurentPoly:
    """Delta(t) of the closure, normalised so that Delta(t) = Delta(1/t) and Delta(1) = 1."""
    if not is_knot_closure(w):
        raise NotAKnot(f"closure of {w.pretty()} has more than one component")
    return alexander_from_matrix(represent(w), w.strands)

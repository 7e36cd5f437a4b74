"""Lucas and Fibonacci polynomials, and the passage from t to z = sqrt(t) - 1/sqrt(t)."""

from __future__ import annotations

import threading

from .polyring import IntPoly, LaurentPoly

Z = IntPoly([0, 1])


class NotBalanced(ValueError):
    pass


class _RecurrenceTable:
    """Memoised sequence P_n = z*P_{n-1} + P_{n-2} from two seeds at indices 0 and 1."""

    def __init__(self, p0: IntPoly, p1: IntPoly):
        self._cache = [p0, p1]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> IntPoly:
        if n < 0:
            raise IndexError(n)
        cache = self._cache
        if n < len(cache):
            return cache[n]
        with self._lock:
            while len(cache) <= n:
                cache.append(Z * cache[-1] + cache[-2])
        return cache[n]


_LUCAS = _RecurrenceTable(IntPoly([2]), Z)
# F_0 = 0 extends F_1 = 1, F_2 = z backwards through the same recursion
_FIB = _RecurrenceTable(IntPoly(), IntPoly([1]))


def lucas(n: int) -> IntPoly:
    return _LUCAS[n]


def fibonacci(n: int) -> IntPoly:
    """F_n(z); F_0 = 0 is allowed."""
    return _FIB[n]


def omega(n: int) -> LaurentPoly:
    """1 - t + t^2 - ... + (-t)^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return LaurentPoly([(-1) ** i for i in range(n)])


def gen_fib_at(n: int) -> LaurentPoly:
    """U_n(t-1, t) from U_n = x U_{n-1} + y U_{n-2}, U_0 = 0, U_1 = 1."""
    x = LaurentPoly([-1, 1])
    y = LaurentPoly([0, 1])
    prev, cur = LaurentPoly(), LaurentPoly([1])
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur + y * prev
    return cur


def lucas_to_z_of_symmetric(p: LaurentPoly) -> IntPoly:
    """Rewrite a palindromic Laurent polynomial in z.

    With p = c_0 + sum_k c_k (t^k + t^-k), each t^k + t^-k is L_{2k}(z).
    """
    if p.is_zero():
        return IntPoly()
    if not p.is_symmetric():
        raise NotBalanced(f"{p} is not symmetric under t -> 1/t")
    out = IntPoly([p[0]])
    for k in range(1, p.high + 1):
        c = p[k]
        if c:
            out = out + lucas(2 * k) * c
    return out


def lucas_partial_sum(n: int, alternating: bool = False) -> IntPoly:
    """1 + L_1 + ... + L_n, or 1 - L_1 + ... + (-1)^n L_n."""
    acc = IntPoly([1])
    for k in range(1, n + 1):
        acc = acc - lucas(k) if alternating and k % 2 else acc + lucas(k)
    return acc


def lucas_even_sum(n: int) -> IntPoly:
    """1 + L_2 + L_4 + ... + L_2n."""
    acc = IntPoly([1])
    for k in range(1, n + 1):
        acc = acc + lucas(2 * k)
    return acc


def fib_product_expansion(n: int, m: int) -> IntPoly:
    """F_{n+m-1} - F_{n+m-3} + ... +- F_{|n-m|+1}, with min(n, m) terms."""
    acc = IntPoly()
    for j in range(min(n, m)):
        term = fibonacci(n + m - 1 - 2 * j)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc

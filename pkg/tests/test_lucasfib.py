import pytest

from burauconway.lucasfib import (
    NotBalanced,
    fib_product_expansion,
    fibonacci,
    gen_fib_at,
    lucas,
    lucas_even_sum,
    lucas_partial_sum,
    lucas_to_z_of_symmetric,
    omega,
)
from burauconway.polyring import IntPoly, LaurentPoly, parse_intpoly, parse_laurent
from oracles import t_to_z_numeric

z = IntPoly([0, 1])


def test_lucas_examples():
    assert lucas(0) == 2
    assert lucas(1) == z
    assert lucas(2) == parse_intpoly("z^2 + 2")
    assert lucas(4) == parse_intpoly("z^4 + 4*z^2 + 2")


def test_fibonacci_examples():
    assert fibonacci(0) == IntPoly()
    assert fibonacci(1) == 1
    assert fibonacci(3) == parse_intpoly("z^2 + 1")
    assert fibonacci(4) == parse_intpoly("z^3 + 2*z")
    assert fibonacci(5) == parse_intpoly("z^4 + 3*z^2 + 1")


def test_omega_and_gen_fib_examples():
    assert omega(1) == LaurentPoly([1])
    assert omega(2) == LaurentPoly([1, -1])
    assert omega(3) == LaurentPoly([1, -1, 1])
    with pytest.raises(ValueError):
        omega(0)
    assert gen_fib_at(0) == LaurentPoly()
    assert gen_fib_at(1) == LaurentPoly([1])
    assert gen_fib_at(2) == LaurentPoly([-1, 1])
    assert gen_fib_at(3) == omega(3)


def test_lucas_to_z_examples():
    assert lucas_to_z_of_symmetric(parse_laurent("t^-1 - 1 + t")) == parse_intpoly("1 + z^2")
    assert lucas_to_z_of_symmetric(LaurentPoly([1])) == 1
    assert lucas_to_z_of_symmetric(parse_laurent("t^-1 + t")) == parse_intpoly("z^2 + 2")
    with pytest.raises(NotBalanced):
        lucas_to_z_of_symmetric(LaurentPoly([1, -1, 1]))


def test_lucas_to_z_matches_numeric_substitution(rng):
    for _ in range(60):
        half = [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))]
        coeffs = half[:0:-1] + half
        p = LaurentPoly(coeffs, -(len(half) - 1))
        assert t_to_z_numeric(p, lucas_to_z_of_symmetric(p))


def test_lucas_is_t_power_sum_numerically():
    # t^(n/2) + (-1)^n t^(-n/2) = L_n(z); checked at even n with t = s^2
    for n in range(0, 30, 2):
        p = LaurentPoly([1], n // 2) + LaurentPoly([1], -(n // 2))
        assert t_to_z_numeric(p, lucas(n))


def test_lucas_product_rule():
    for n in range(61):
        for m in range(n + 1):
            assert lucas(n) * lucas(m) == lucas(n + m) + lucas(n - m) * (-1) ** m


def test_lucas_factorisation_mod4():
    for n in range(1, 51):
        lhs = lucas_partial_sum(n) * lucas_partial_sum(n, alternating=True)
        rhs = lucas_even_sum(n) * (-1) ** n
        assert (lhs - rhs).reduce_mod(4).is_zero(), n


def test_fibonacci_product_rule():
    for n in range(1, 41):
        for m in range(1, n + 1):
            assert fibonacci(n) * fibonacci(m) == fib_product_expansion(n, m)


def test_quartic_identity():
    for n in range(1, 41):
        f = fibonacci(n)
        # written as 3F^4 + F_3 F^4 + ..., i.e. (z^2 + 4) F^4 + ...
        lhs = f ** 4 * 3 + fibonacci(3) * f ** 4 + f ** 2 * (4 * (-1) ** n) - fibonacci(2 * n) ** 2
        assert lhs.is_zero(), n
        assert (parse_intpoly("z^2 + 4") * f ** 4 + f ** 2 * (4 * (-1) ** n) - fibonacci(2 * n) ** 2).is_zero()


def test_omega_square_is_fibonacci_square():
    for n in range(1, 42, 2):
        assert lucas_to_z_of_symmetric((omega(n) ** 2).balance()) == fibonacci(n) ** 2
        # the division by t^(n-1) is exactly the centring shift
        assert (omega(n) ** 2).shift(-(n - 1)) == (omega(n) ** 2).balance()


def test_gen_fib_matches_omega():
    for n in range(1, 51):
        assert gen_fib_at(n) == omega(n) * (-1) ** (n - 1)


def test_parity():
    for n in range(51):
        assert all(c == 0 for e, c in enumerate(lucas(n).coeffs) if e % 2 != n % 2)
        if n:
            assert all(c == 0 for e, c in enumerate(fibonacci(n).coeffs) if e % 2 != (n - 1) % 2)

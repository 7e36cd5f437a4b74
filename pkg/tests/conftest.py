import random
from math import gcd

import pytest

from burauconway.braidword import BraidWord, is_knot_closure, ww_star
from burauconway.polyring import IntPoly, LaurentPoly

ACCEPTANCE_LINES = []


def rand_intpoly(rng: random.Random, max_deg: int = 8, bound: int = 20) -> IntPoly:
    return IntPoly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg + 1))])


def rand_laurent(rng: random.Random, max_len: int = 8, bound: int = 20) -> LaurentPoly:
    coeffs = [rng.randint(-bound, bound) for _ in range(rng.randint(0, max_len))]
    return LaurentPoly(coeffs, rng.randint(-6, 6))


def rand_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    return BraidWord(strands, tuple(rng.choice((-1, 1)) * rng.randint(1, strands - 1) for _ in range(length)))


def rand_knot_ww_word(rng: random.Random, strands: int, k: int = 1, lo: int = 2, hi: int = 10) -> BraidWord:
    """w such that (ww*)^k closes to a knot."""
    # the closure permutation of (ww*)^k is p^(2k), never an n-cycle unless gcd(2k, n) = 1
    if gcd(2 * k, strands) != 1:
        raise ValueError(f"(ww*)^{k} on {strands} strands never closes to a knot")
    while True:
        w = rand_word(rng, strands, rng.randint(lo, hi))
        if is_knot_closure(ww_star(w, k)):
            return w


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ckn.params import Params


def rational(rng: random.Random, lo: int, hi: int, den_max: int = 6) -> Fraction:
    den = rng.randint(1, den_max)
    num = rng.randint(lo * den, hi * den)
    return Fraction(num, den)


def random_params(
    rng: random.Random,
    require_distinct_slopes: bool = False,
    require_equal_slopes: bool = False,
) -> Params:
    """Random valid full-space tuple with small rational entries."""
    while True:
        n = rng.choice((1, 2, 3, 4, 5))
        p = 1 + rational(rng, 0, 3)
        q = 1 + rational(rng, 0, 3)
        r = 1 + rational(rng, 0, 4)
        if n == 1 and rng.random() < 0.25:
            q = Fraction(rng.randint(1, 8), rng.randint(2, 8))
            r = Fraction(rng.randint(1, 8), rng.randint(2, 8))
            if q <= 0 or r <= 0:
                continue
        a = rational(rng, -2 * n - 3, n + 2)
        b = rational(rng, -2 * n - 3, n + 3)
        if require_equal_slopes:
            # force (a+n)/q == (b-p+n)/p by solving for b
            b = p * (a + n) / q + p - n
        c = rational(rng, -2 * n - 5, n + 3)
        params = Params(n=n, p=p, q=q, r=r, a=a, b=b, c=c)
        slope_a = (a + n) / q
        slope_b = (b - p + n) / p
        if require_distinct_slopes and slope_a == slope_b:
            continue
        if require_equal_slopes and slope_a != slope_b:
            continue
        return params


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)

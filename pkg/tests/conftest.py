from fractions import Fraction

import mpmath
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from transcert.mpreal import RInterval

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ORACLE_DPS = 110
mpmath.mp.dps = ORACLE_DPS


@pytest.fixture(autouse=True)
def _oracle_precision():
    """Keep the mpmath oracle at full precision even if a test changes it."""
    mpmath.mp.dps = ORACLE_DPS
    yield
    mpmath.mp.dps = ORACLE_DPS

PRECISIONS = st.sampled_from([53, 64, 128, 256])


def rationals(lo=-50, hi=50, max_den=1000):
    """Fractions in [lo, hi] with denominators up to ``max_den``."""
    return st.integers(1, max_den).flatmap(
        lambda den: st.integers(lo * den, hi * den).map(lambda num: Fraction(num, den)))


def as_mpf(b):
    return mpmath.mpf((b.man, b.exp)) if b.man else mpmath.mpf(0)


def encloses(iv: RInterval, value) -> bool:
    """True when the mpmath value lies in the interval (value known to ~110 digits)."""
    v = mpmath.mpf(value)
    slack = mpmath.mpf(10) ** -100 * max(1, abs(v))
    return as_mpf(iv.lo) - slack <= v <= as_mpf(iv.hi) + slack


def mp_of(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


@pytest.fixture
def p128():
    return 128

"""Exact-rational Liouville constant machinery.

Everything here is exact (``fractions.Fraction``); intervals appear only when a
quantity must be handed to the real-interval layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .mpreal import BigFloat, RInterval

WITNESS_CAP = 5


def liouville_partial(n: int, b: int = 10, coeffs=None) -> Fraction:
    """sum_{k=1..n} a_k b^(-k!) with a_k = 1 unless ``coeffs`` is given."""
    if n < 1 or b < 2:
        raise ValueError("need n >= 1 and b >= 2")
    total = Fraction(0)
    for k in range(1, n + 1):
        a_k = 1 if coeffs is None else coeffs[k - 1]
        total += Fraction(a_k, b ** math.factorial(k))
    return total


def tail_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Open bounds (lo, hi) on sum_{k>n} 10^(-k!).

    The first omitted term gives the lower bound; the rest are at most a
    tenth of it in total, well under the factor-two upper bound.
    """
    first = Fraction(1, 10 ** math.factorial(n + 1))
    return first, 2 * first


@dataclass(frozen=True)
class Witness:
    n: int
    p: int
    q: int
    gap_lower: Fraction
    gap_upper: Fraction
    threshold: Fraction  # q^-n
    holds: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": str(self.p),
            "q": f"10^{math.factorial(self.n)}",
            "gap_lower": f"10^-{math.factorial(self.n + 1)}",
            "gap_upper": f"2*10^-{math.factorial(self.n + 1)}",
            "threshold": f"10^-{self.n * math.factorial(self.n)}",
            "holds": self.holds,
        }


def approx_witness(n: int) -> Witness:
    """Rational witness p/q, q = 10^{n!}, with 0 < |L - p/q| < q^-n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > WITNESS_CAP:
        raise ValueError(f"witness cap is n <= {WITNESS_CAP}")
    q = 10 ** math.factorial(n)
    approx = liouville_partial(n)
    p = approx * q
    assert p.denominator == 1
    lo, hi = tail_bounds(n)
    threshold = Fraction(1, q ** n)
    return Witness(n, int(p), q, lo, hi, threshold, lo > 0 and hi < threshold)


@dataclass(frozen=True)
class LiouvilleQuadratic:
    a_bounds: tuple[Fraction, Fraction]
    c_bounds: tuple[Fraction, Fraction]
    root1: Fraction
    root1_residual: Fraction
    root2: RInterval
    residual: RInterval
    factorization_ok: bool
    monic_at_minus_one: Fraction


def factorization_identity(a: Fraction, c: Fraction) -> bool:
    """(Ax + C)(x + 1) == A x^2 + (A + C) x + C, by exact expansion."""
    return _poly_mul([c, a], [1, 1]) == [c, a + c, a]


def _poly_mul(u: list, v: list) -> list:
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] += Fraction(x) * y
    return out


def _enclose(lo: Fraction, hi: Fraction, p: int) -> RInterval:
    return RInterval(BigFloat.from_fraction(lo, p, False), BigFloat.from_fraction(hi, p, True), p)


def liouville_quadratic(n_terms: int = 4, p: int = 128) -> LiouvilleQuadratic:
    """Roots of A x^2 + (A + C) x + C = (A x + C)(x + 1).

    A = sum_{k>=0} 10^-k! and C = sum_{k>=1} 10^-k!, so A = C + 1/10.  The
    roots are -1 and -C/A.  ``monic_at_minus_one`` is 1 - A + C, the value of
    x^2 + A x + C at x = -1 (exactly 9/10: the tails cancel).
    """
    if n_terms < 2:
        raise ValueError("n_terms must be >= 2")
    c_part = liouville_partial(n_terms)
    a_part = c_part + Fraction(1, 10)  # k = 0 adds 10^-0! = 10^-1 again
    t_lo, t_hi = tail_bounds(n_terms)
    a_bounds = (a_part + t_lo, a_part + t_hi)
    c_bounds = (c_part + t_lo, c_part + t_hi)
    # root1 = -1 annihilates A x^2 + (A + C) x + C for any A, C
    root1 = Fraction(-1)
    res1 = a_part * root1 ** 2 + (a_part + c_part) * root1 + c_part
    # -C/A with independent enclosures of A and C
    r_lo = -c_bounds[1] / a_bounds[0]
    r_hi = -c_bounds[0] / a_bounds[1]
    root2 = _enclose(r_lo, r_hi, p)
    A = _enclose(*a_bounds, p)
    C = _enclose(*c_bounds, p)
    residual = A * root2.sqr() + (A + C) * root2 + C
    ok = factorization_identity(a_part, c_part) and factorization_identity(Fraction(2, 3), Fraction(5, 7))
    monic = 1 - a_part + c_part
    return LiouvilleQuadratic(a_bounds, c_bounds, root1, res1, root2, residual, ok, monic)

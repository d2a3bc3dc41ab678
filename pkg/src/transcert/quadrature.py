"""Verified composite Simpson quadrature and the Gaussian-integral claims."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import mpreal as mr
from .expr import Verdict, VerdictKind
from .cinterval import CInterval
from .mpreal import RInterval

IntervalFn = Callable[[RInterval], RInterval]


@dataclass(frozen=True)
class IntegrandSpec:
    """``value`` encloses f on an interval; ``d4bound`` encloses f'''' on one."""

    value: IntervalFn
    d4bound: IntervalFn


def _gauss(x: RInterval) -> RInterval:
    return mr.exp(-x.sqr())


def _gauss_d4(x: RInterval) -> RInterval:
    x2 = x.sqr()
    poly = 16 * x2.sqr() - 48 * x2 + 12
    return poly * mr.exp(-x2)


GAUSSIAN = IntegrandSpec(_gauss, _gauss_d4)


def polynomial_spec(coeffs: list[Fraction]) -> IntegrandSpec:
    """Integrand for sum c_k x^k; its fourth derivative is formed exactly."""
    coeffs = [Fraction(c) for c in coeffs]

    def horner(cs: list[Fraction], x: RInterval) -> RInterval:
        acc = RInterval.point(0, x.prec)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    d4 = [c * k * (k - 1) * (k - 2) * (k - 3) for k, c in enumerate(coeffs)][4:]
    return IntegrandSpec(lambda x: horner(coeffs, x),
                         lambda x: horner(d4, x) if d4 else RInterval.point(0, x.prec))


def verified_simpson(f: IntegrandSpec, a: Fraction, b: Fraction, n: int,
                     p: int = 128, remainder: str = "signed") -> RInterval:
    """Enclosure of the integral of f over [a, b] by composite Simpson with n panels.

    Each double panel [x_{2j}, x_{2j+2}] contributes the exact remainder
    -(h^5/90) f''''(xi_j).  ``signed`` encloses f'''' over every panel, so the
    width falls like n^-5; ``symmetric`` uses the classical bound
    +-(h^5/90) sum_j max |f''''| and falls like n^-4.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    if remainder not in ("signed", "symmetric"):
        raise ValueError(f"unknown remainder mode {remainder!r}")
    h = (b - a) / n
    total = RInterval.point(0, p)
    for k in range(n + 1):
        w = 1 if k in (0, n) else (4 if k % 2 else 2)
        total = total + w * f.value(RInterval.point(a + k * h, p))
    estimate = total * (h / 3)
    d4_sum = RInterval.point(0, p)
    for j in range(n // 2):
        lo, hi = a + 2 * j * h, a + (2 * j + 2) * h
        d4 = f.d4bound(RInterval.of(lo, hi, p))
        if remainder == "symmetric":
            m = d4.mag()
            d4 = RInterval(-m, m, p)
        d4_sum = d4_sum + d4
    return estimate - d4_sum * (h ** 5 / 90)


def gauss_tail(T: Fraction, p: int = 128) -> RInterval:
    """[0, e^{-T^2} / (2T)], which contains the tail integral of e^{-x^2} over [T, inf)."""
    T = Fraction(T)
    if T <= 0:
        raise ValueError("T must be positive")
    t = RInterval.point(T, p)
    upper = mr.exp(-t.sqr()) / (2 * t)
    return RInterval(mr.ZERO, upper.hi, p)


def claim_gauss_identity(T: Fraction = 4, n: int = 2000, p: int = 128) -> Verdict:
    """Whole-line Gaussian integral against sqrt(pi).

    The improper integral can only be shown consistent: E = Simpson over
    [-T, T] plus both tails must overlap sqrt(pi).
    """
    T = Fraction(T)
    if T < 2:
        raise ValueError("T must be >= 2")
    core = verified_simpson(GAUSSIAN, -T, T, n, p)
    tail = gauss_tail(T, p)
    total = core + 2 * tail
    root_pi = mr.sqrt(mr.const_pi(p))
    diff = total - root_pi
    extras = {"core": core, "tail": tail, "difference": diff}
    if diff.contains_zero():
        w = diff.width_fraction()
        return Verdict(VerdictKind.CONSISTENT_WITHIN, CInterval.real(total),
                       CInterval.real(root_pi), p, w, extras)
    return Verdict(VerdictKind.CERTIFIED_FALSE, CInterval.real(total),
                   CInterval.real(root_pi), p, None, extras)


def integral_bound_rhs(a: Fraction, b: Fraction, p: int = 128) -> RInterval:
    """(e^e / pi) (e^{-pi a} - e^{-pi b})."""
    pi = mr.const_pi(p)
    e = mr.const_e(p)
    coef = mr.exp(e) / pi
    return coef * (mr.exp(-pi * Fraction(a)) - mr.exp(-pi * Fraction(b)))


def discriminant_certificate(p: int = 128) -> tuple[VerdictKind, RInterval]:
    """pi^2 - 4e < 0 makes x^2 - pi x + e > 0 for every real x."""
    disc = mr.const_pi(p).sqr() - 4 * mr.const_e(p)
    kind = VerdictKind.CERTIFIED_TRUE if disc.hi.man < 0 else (
        VerdictKind.CERTIFIED_FALSE if disc.lo.man >= 0 else VerdictKind.UNDECIDED)
    return kind, disc


def claim_integral_bound(a: Fraction, b: Fraction, n: int = 200, p: int = 128) -> Verdict:
    """Integral of e^{-x^2} over [a, b] below (e^e/pi)(e^{-pi a} - e^{-pi b})."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    lhs = verified_simpson(GAUSSIAN, a, b, n, p)
    rhs = integral_bound_rhs(a, b, p)
    disc_kind, disc = discriminant_certificate(p)
    if lhs.hi < rhs.lo:
        kind = VerdictKind.CERTIFIED_TRUE
    elif lhs.lo >= rhs.hi:
        kind = VerdictKind.CERTIFIED_FALSE
    else:
        kind = VerdictKind.UNDECIDED
    return Verdict(kind, CInterval.real(lhs), CInterval.real(rhs), p, None,
                   {"discriminant": disc, "discriminant_verdict": disc_kind})

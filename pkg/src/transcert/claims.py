"""Registry of the workbench claims C01-C18.

Each claim is a procedure returning a :class:`Report`.  The direction the
source asserts is stored apart from the engine verdict; a disagreement is
flagged in the report notes instead of failing.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from . import cinterval as ci
from . import liouville as lv
from . import mpreal as mr
from . import quadrature as qd
from . import ybe
from .cinterval import CInterval
from .errors import UnknownClaim
from .expr import Verdict, VerdictKind, certify, decide
from .mpreal import RInterval

T, F = VerdictKind.CERTIFIED_TRUE, VerdictKind.CERTIFIED_FALSE
CW, U = VerdictKind.CONSISTENT_WITHIN, VerdictKind.UNDECIDED
DIGITS = 40
ALPHAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def interval_strings(x, digits: int = DIGITS) -> list[str] | None:
    """Outward-rounded decimal endpoints of a real enclosure (real part of a complex one)."""
    if x is None:
        return None
    if isinstance(x, CInterval):
        x = x.re
    lo, hi = x.decimal_bounds(digits)
    return [lo, hi]


def _jsonable(v):
    if isinstance(v, RInterval):
        return interval_strings(v)
    if isinstance(v, CInterval):
        return {"re": interval_strings(v.re), "im": interval_strings(v.im)}
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, VerdictKind):
        return v.value
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class Report:
    id: str
    statement: str
    verdict: Verdict
    source_direction: str | None = None
    runtime_ms: float | None = None
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def kind(self) -> VerdictKind:
        return self.verdict.kind

    def as_dict(self, timing: bool = False) -> dict:
        v = self.verdict
        return {
            "id": self.id,
            "statement": self.statement,
            "verdict": v.kind.value,
            "eps": None if v.eps is None else str(v.eps),
            "lhs": interval_strings(v.lhs),
            "rhs": interval_strings(v.rhs),
            "precision": v.precision_used,
            "runtime_ms": round(self.runtime_ms, 3) if timing and self.runtime_ms is not None else None,
            "source_direction": self.source_direction,
            "notes": list(self.notes),
            "details": _jsonable(self.details),
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), indent=2)


@dataclass(frozen=True)
class Claim:
    id: str
    name: str
    statement: str
    source_direction: str | None
    procedure: Callable[[int, int], Report]


# ---------------------------------------------------------------------------
# Shared evaluator f(z, w) = |e^z + e^w|
# ---------------------------------------------------------------------------

def f_zw(z: CInterval, w: CInterval) -> RInterval:
    return ci.cabs(ci.cexp(z) + ci.cexp(w))


def _cpoint(re, im, p: int) -> CInterval:
    return CInterval(RInterval.point(Fraction(re), p), RInterval.point(Fraction(im), p))


def _report(cid: str, verdict: Verdict, notes=(), **details) -> Report:
    c = REGISTRY[cid]
    rep = Report(cid, c.statement, verdict, c.source_direction, notes=list(notes), details=details)
    if c.source_direction is not None and verdict.decided:
        engine = "true" if verdict.kind is T else "false"
        if engine != c.source_direction:
            rep.notes.append(f"disagrees with the source, which asserts the statement is {c.source_direction}")
    return rep


def _all_true(kinds) -> VerdictKind:
    kinds = list(kinds)
    if all(k is T for k in kinds):
        return T
    if any(k is F for k in kinds):
        return F
    return U


# ---------------------------------------------------------------------------
# C01-C04: identities and inequalities on the unit circle
# ---------------------------------------------------------------------------

EULER_EPS = Fraction(1, 1 << 96)


def claim_euler(p_start: int = 128, p_max: int = 512) -> Report:
    v = certify("abs(exp(pi*i) + 1) ~= 0", p_start, p_max, eps=EULER_EPS)
    p = v.precision_used
    pi = mr.const_pi(p)
    f = f_zw(CInterval(RInterval.point(0, p), pi), CInterval.point(0, 0, p))
    in_bound = f.lo >= mr.ZERO and f.hi.to_fraction() <= EULER_EPS
    kind = v.kind if in_bound else U
    return _report("C01", Verdict(kind, v.lhs, v.rhs, p, EULER_EPS), f_pi_i_0=f)


def claim_ei_minus_pi(p_start: int = 128, p_max: int = 512) -> Report:
    v = certify("abs(exp(i) - pi) < e", p_start, p_max)
    p = v.precision_used
    pi = mr.const_pi(p)
    # f(i, pi i + ln pi) is the same quantity through the shared evaluator
    f = f_zw(CInterval.i(p), CInterval(mr.ln(pi), pi))
    distance = v.lhs.re - v.rhs.re
    notes = ["the engine distance |e^i - pi| - e is positive; see 'distance'"] if distance.lo.man > 0 else []
    return _report("C02", v, notes, f_form=f, distance=distance)


def triangle_angle(a, b, c, p: int = 128) -> RInterval:
    """Angle opposite side ``c`` in a triangle with sides a, b, c (law of cosines)."""
    cos_c = (a.sqr() + b.sqr() - c.sqr()) / (2 * a * b)
    return mr.acos(cos_c)


def claim_triangle_angle(p_start: int = 128, p_max: int = 512) -> Report:
    """Angle B between sides 1 and pi, opposite e, compared with 1 radian."""
    p = p_start
    while True:
        one = RInterval.point(1, p)
        B = triangle_angle(one, mr.const_pi(p), mr.const_e(p), p)
        kind = decide("<", B, one)
        if kind is not U or p >= p_max:
            break
        p = min(2 * p, p_max)
    return _report("C03", Verdict(kind, CInterval.real(B), CInterval.real(one), p),
                   ["B < 1 radian is equivalent to |e^i - pi| > e, so this agrees with C02"]
                   if kind is T else [], angle=B)


def claim_pi_i_identity(p_start: int = 128, p_max: int = 512) -> Report:
    v = certify("abs(pi^i - i^pi) ~= 2*sin(pi^2/4 - ln(sqrt(pi)))", p_start, p_max,
                eps=Fraction(1, 10 ** 30))
    notes = ["both sides are close to 1.8958; the source's numerical value 0.95 is not reproduced"]
    return _report("C04", v, notes)


# ---------------------------------------------------------------------------
# C05-C06: the inequality |e^{1-z} + e^{conj z}| > pi
# ---------------------------------------------------------------------------

def exp_sum_modulus(x: Fraction, y: Fraction, p: int) -> RInterval:
    z = _cpoint(x, y, p)
    return f_zw(1 - z, ci.conj(z))


def claim_exp_sum_grid(step: Fraction = Fraction(1, 4), half: Fraction = Fraction(3),
                    p: int = 128) -> tuple[Verdict, dict]:
    """Point evidence on the grid step * Z^2 inside [-half, half]^2 (not a proof)."""
    step, half = Fraction(step), Fraction(half)
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(2 * half / step) + 1
    coords = [-half + k * step for k in range(count)]
    pi = mr.const_pi(p)
    worst, failures, kinds = None, [], []
    for x in coords:
        for y in coords:
            val = exp_sum_modulus(x, y, p)
            kind = decide(">", val, pi)
            kinds.append(kind)
            if kind is not T:
                failures.append([str(x), str(y)])
            if worst is None or val.lo < worst[2].lo:
                worst = (x, y, val)
    details = {"points": len(kinds), "certified_points": sum(k is T for k in kinds),
               "failures": failures, "min_point": [str(worst[0]), str(worst[1])],
               "min_value": worst[2]}
    return Verdict(_all_true(kinds), CInterval.real(worst[2]), CInterval.real(pi), p), details


def claim_exp_sum_grid_report(p_start: int = 128, p_max: int = 512, step=Fraction(1, 4)) -> Report:
    v, details = claim_exp_sum_grid(step, 3, p_start)
    return _report("C05", v, ["grid evidence over [-3, 3]^2, not a proof for all z"], **details)


def claim_exp_sum_minimum(p_start: int = 128, p_max: int = 512) -> Report:
    """2 sqrt(e) > pi, plus a pointwise check of |e^{1-z} + e^{conj z}| = e^{1-x} + e^x."""
    p = p_start
    while True:
        two_root_e = 2 * mr.sqrt(mr.const_e(p))
        pi = mr.const_pi(p)
        kind = decide(">", two_root_e, pi)
        if kind is not U or p >= p_max:
            break
        p = min(2 * p, p_max)
    tol = Fraction(1, 1 << (p // 2))
    deviation, identity_ok = Fraction(0), True
    for x in (Fraction(-3), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2)):
        closed = mr.exp(1 - RInterval.point(x, p)) + mr.exp(RInterval.point(x, p))
        for y in (Fraction(-3), Fraction(0), Fraction(1, 3), Fraction(7), Fraction(-19, 2)):
            val = exp_sum_modulus(x, y, p)
            diff = val - closed
            deviation = max(deviation, diff.width_fraction())
            identity_ok &= diff.contains_zero() and diff.width_fraction() <= tol
    if not identity_ok:
        kind = U
    return _report("C06", Verdict(kind, CInterval.real(two_root_e), CInterval.real(pi), p),
                   margin=two_root_e - pi, identity_checked=identity_ok,
                   identity_max_width=float(deviation))


# ---------------------------------------------------------------------------
# C07-C12: integrals and scalar inequalities
# ---------------------------------------------------------------------------

def claim_gauss(p_start: int = 128, p_max: int = 512) -> Report:
    v = qd.claim_gauss_identity(4, 2000, p_start)
    notes = ["improper integral: Simpson on [-4, 4] plus both tails, consistent with sqrt(pi)"]
    return _report("C07", v, notes, **v.extras)


INTEGRAL_BOUND_CASES = ((0, 1), (-1, 2), (1, 3))


def claim_integral_bound(p_start: int = 128, p_max: int = 512) -> Report:
    results = [qd.claim_integral_bound(a, b, 200, p_start) for a, b in INTEGRAL_BOUND_CASES]
    disc_kind, disc = qd.discriminant_certificate(p_start)
    kind = _all_true([r.kind for r in results] + [disc_kind])
    first = results[0]
    cases = {f"[{a}, {b}]": {"verdict": r.kind, "lhs": r.lhs.re, "rhs": r.rhs.re}
             for (a, b), r in zip(INTEGRAL_BOUND_CASES, results)}
    return _report("C08", Verdict(kind, first.lhs, first.rhs, p_start), cases=cases,
                   discriminant=disc, discriminant_verdict=disc_kind)


def claim_disc(p_start: int = 128, p_max: int = 512) -> Report:
    return _report("C09", certify("pi^2 < 4*e", p_start, p_max))


def claim_circle_square(p_start: int = 128, p_max: int = 512) -> Report:
    return _report("C10", certify("pi^3 > 4*e^2", p_start, p_max))


def claim_xi_ix(p_start: int = 128, p_max: int = 512) -> Report:
    """x^i = i^x has no positive real solution: max x^{1/x} = e^{1/e} < e^{pi/2}."""
    p = p_start
    while True:
        pi, e = mr.const_pi(p), mr.const_e(p)
        k1 = decide(">", pi / 2, 1 / e)
        peak, target = mr.exp(1 / e), mr.exp(pi / 2)
        k2 = decide("<", peak, target)
        kind = _all_true([k1, k2])
        if kind is not U or p >= p_max:
            break
        p = min(2 * p, p_max)
    # sampled sanity check of x^{1/x} <= e^{1/e} on a log grid over [0.01, 100]
    xs = [10 ** (-2 + 4 * k / 400) for k in range(401)] + [math.e]
    vals = [x ** (1 / x) for x in xs]
    argmax = xs[max(range(len(xs)), key=vals.__getitem__)]
    sampled_ok = max(vals) <= float(peak.hi) * (1 + 1e-15)
    return _report("C11", Verdict(kind, CInterval.real(peak), CInterval.real(target), p),
                   half_pi_vs_inv_e=k1, sample_max_at=argmax, sampled_bound_ok=sampled_ok)


def _g(r: Fraction, p: int) -> RInterval:
    """(1 + 1/r)^r - pi^2 / 4."""
    rr = RInterval.point(r, p)
    return mr.pow_real(1 + 1 / rr, rr) - mr.const_pi(p).sqr() / 4


def r_threshold(tol: Fraction = Fraction(1, 10 ** 6), p: int = 128,
                p_max: int = 512) -> tuple[VerdictKind, RInterval, dict]:
    """Certified bisection for the root of (1+1/r)^r = pi^2/4 on [4, 5]."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = Fraction(4), Fraction(5)
    pi2_4 = mr.const_pi(p).sqr() / 4
    g4 = RInterval.point(Fraction(5, 4) ** 4, p) - pi2_4
    g5 = RInterval.point(Fraction(6, 5) ** 5, p) - pi2_4
    ends_ok = g4.hi.man < 0 and g5.lo.man > 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        q = p
        while True:
            g = _g(mid, q)
            if g.lo.man > 0 or g.hi.man < 0 or q >= p_max:
                break
            q = min(2 * q, p_max)
        if g.hi.man < 0:
            lo = mid
        elif g.lo.man > 0:
            hi = mid
        else:
            break  # the midpoint cannot be separated from the root
    kind = T if ends_ok and hi - lo <= tol else U
    # g is increasing on [4, 5]: g(r) < 0 makes the discriminant pi^2 - 4 (1+1/r)^r positive
    return kind, RInterval.of(lo, hi, p), {"g4": g4, "g5": g5}


def claim_r_threshold(p_start: int = 128, p_max: int = 512) -> Report:
    kind, r, ends = r_threshold(Fraction(1, 10 ** 6), p_start, p_max)
    notes = ["real roots of x^2 - pi x + (1+1/r)^r exist for r below the threshold"]
    return _report("C12", Verdict(kind, CInterval.real(r), None, p_start), notes,
                   r_star=r, discriminant_at_4_positive=ends["g4"].hi.man < 0,
                   discriminant_at_5_negative=ends["g5"].lo.man > 0, **ends)


# ---------------------------------------------------------------------------
# C13-C14: Liouville constant
# ---------------------------------------------------------------------------

def claim_liouville_approx(p_start: int = 128, p_max: int = 512) -> Report:
    witnesses = [lv.approx_witness(n) for n in range(1, lv.WITNESS_CAP + 1)]
    kind = T if all(w.holds for w in witnesses) else F
    return _report("C13", Verdict(kind, None, None, 0), ["exact rational arithmetic"],
                   witnesses=[w.as_dict() for w in witnesses])


def claim_liouville_quadratic(p_start: int = 128, p_max: int = 512) -> Report:
    q = lv.liouville_quadratic(4, p_start)
    ok = q.root1_residual == 0 and q.residual.contains_zero() and q.factorization_ok
    notes = [f"the monic x^2 + A x + C equals {q.monic_at_minus_one} at x = -1; "
             "-1 is a root of the factored form A x^2 + (A+C) x + C only"]
    return _report("C14", Verdict(T if ok else F, CInterval.real(q.root2), None, p_start), notes,
                   root1=q.root1, root2=q.root2, residual=q.residual,
                   a_bounds=list(q.a_bounds), c_bounds=list(q.c_bounds),
                   factorization_ok=q.factorization_ok)


# ---------------------------------------------------------------------------
# C15-C18: Yang-Baxter operators and the matrix inequality
# ---------------------------------------------------------------------------

MATRIX_EULER_TOL = 1e-12
YBE_TOL = 1e-11


def _family():
    return [(f"alpha={a}", ybe.alpha_family(a)) for a in ALPHAS] + [("majorana", ybe.majorana_J())]


def claim_matrix_euler(p_start: int = 128, p_max: int = 512) -> Report:
    residuals = {name: ybe.euler_matrix_residual(J, "interval", p_start) for name, J in _family()}
    kind = T if max(residuals.values()) <= MATRIX_EULER_TOL else U
    return _report("C15", Verdict(kind, None, None, p_start),
                   ["rigorous interval bound on max |e^{pi J} + I| entry"],
                   residual_bounds=residuals, tolerance=MATRIX_EULER_TOL)


def claim_ybe_family(p_start: int = 128, p_max: int = 512, step: float = 1.0) -> Report:
    rows = {}
    ok = True
    for a in ALPHAS:
        J = ybe.alpha_family(a)
        rep = ybe.j_report(J)
        pts, grid = ybe.ybe_grid(J, step)
        worst = max(max(r) for r in grid)
        exact_ok = rep.squares_to_minus_identity == 0 and rep.commutation_12_23 == 0
        ok &= exact_ok and worst <= YBE_TOL
        rows[f"alpha={a}"] = {"j_squared_plus_identity": rep.squares_to_minus_identity,
                              "commutator": rep.commutation_12_23,
                              "max_ybe_residual": worst, "grid": pts, "residuals": grid}
    return _report("C16", Verdict(T if ok else F, None, None, 0),
                   ["axioms checked exactly over Gaussian rationals; the residual grid is floating point"],
                   family=rows, tolerance=YBE_TOL)


def claim_majorana(p_start: int = 128, p_max: int = 512) -> Report:
    J = ybe.majorana_J()
    rep = ybe.j_report(J)
    ok = rep.squares_to_minus_identity == 0 and rep.anticommutation_12_23 == 0 \
        and rep.commutation_12_23 != 0
    res = ybe.ybe_residual(J, 0.3, 0.7)
    return _report("C17", Verdict(T if ok else F, None, None, 0),
                   ["the colored Yang-Baxter residual is measured, not asserted"],
                   j_squared_plus_identity=rep.squares_to_minus_identity,
                   anticommutator=rep.anticommutation_12_23, commutator=rep.commutation_12_23,
                   ybe_residual_at_0_3_0_7=res)


def claim_matrix_inequality(p_start: int = 128, p_max: int = 512, seed: int = 0,
                            samples: int = 10_000) -> Report:
    """X^2 + e I > pi X entrywise for positive 2x2 X with trace > pi.

    Off-diagonal entries equal x_ij (trace - pi) and diagonal ones
    x_ii^2 - pi x_ii + e + x_12 x_21; the latter is positive once pi^2 - 4e < 0
    is certified, so the fuzz run only cross-checks the decomposition.
    """
    disc_kind, disc = qd.discriminant_certificate(p_start)
    pos = ybe.fuzz_matrix_inequality(samples, seed, True)
    neg = ybe.fuzz_matrix_inequality(200, seed, False)
    ok = disc_kind is T and pos.holds == pos.samples and pos.max_certificate_gap <= 1e-12 \
        and neg.holds < neg.samples
    notes = ["'>' is read entrywise on entrywise-positive matrices"]
    return _report("C18", Verdict(T if ok else F, None, None, p_start), notes,
                   discriminant=disc, samples=pos.samples, holds=pos.holds,
                   max_certificate_gap=pos.max_certificate_gap,
                   trace_below_pi_violations=neg.samples - neg.holds, seed=seed)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def _claims() -> list[Claim]:
    return [
        Claim("C01", "euler_identity", "|e^{pi i} + 1| ~= 0 (also f(pi i, 0) = 0)", "true", claim_euler),
        Claim("C02", "ei_minus_pi", "|e^i - pi| < e", "true", claim_ei_minus_pi),
        Claim("C03", "triangle_angle", "angle B of the (1, e, pi) triangle is < 1 radian", None,
              claim_triangle_angle),
        Claim("C04", "pi_i_identity", "|pi^i - i^pi| = 2 sin(pi^2/4 - ln sqrt(pi))", "true", claim_pi_i_identity),
        Claim("C05", "exp_sum_grid", "|e^{1-z} + e^{conj z}| > pi on a grid over [-3, 3]^2", "true",
              claim_exp_sum_grid_report),
        Claim("C06", "exp_sum_minimum", "2 sqrt(e) > pi (minimum of e^{1-x} + e^x)", "true",
              claim_exp_sum_minimum),
        Claim("C07", "gauss_identity", "integral of e^{-x^2} over R equals sqrt(pi)", None, claim_gauss),
        Claim("C08", "integral_bound", "int_a^b e^{-x^2} < (e^e/pi)(e^{-pi a} - e^{-pi b})", "true",
              claim_integral_bound),
        Claim("C09", "disc_negative", "pi^2 < 4e", "true", claim_disc),
        Claim("C10", "circle_square_area", "pi^3 > 4e^2", "true", claim_circle_square),
        Claim("C11", "xi_ix_no_solution", "x^i = i^x has no positive real solution", "true",
              claim_xi_ix),
        Claim("C12", "r_threshold", "threshold r* where (1+1/r)^r = pi^2/4, r in [4, 5]", None,
              claim_r_threshold),
        Claim("C13", "liouville_approx", "0 < |L - p/q| < q^-n for q = 10^{n!}, n = 1..5", "true",
              claim_liouville_approx),
        Claim("C14", "liouville_quadratic", "A x^2 + (A+C) x + C has roots -1 and -C/A", "true",
              claim_liouville_quadratic),
        Claim("C15", "matrix_euler", "e^{pi J} + I = 0 for the alpha family and the Majorana matrix",
              "true", claim_matrix_euler),
        Claim("C16", "ybe_family", "alpha-family J gives solutions of the colored Yang-Baxter equation", "true", claim_ybe_family),
        Claim("C17", "majorana_anticommute", "Majorana J: J^2 = -I and J12 J23 = -J23 J12", "true",
              claim_majorana),
        Claim("C18", "matrix_inequality", "X^2 + e I > pi X for positive 2x2 X with trace > pi",
              "true", claim_matrix_inequality),
    ]


REGISTRY: dict[str, Claim] = {c.id: c for c in _claims()}
CLAIM_IDS = tuple(REGISTRY)


def run_claim(cid: str, p_start: int = 128, p_max: int = 512, **options) -> Report:
    cid = cid.upper()
    if cid not in REGISTRY:
        raise UnknownClaim(cid)
    if p_start > p_max:
        raise ValueError("precision must not exceed max precision")
    t0 = time.perf_counter()
    rep = REGISTRY[cid].procedure(p_start, p_max, **options)
    rep.runtime_ms = (time.perf_counter() - t0) * 1000
    return rep


def expected_verdicts() -> dict[str, dict]:
    text = resources.files("transcert").joinpath("data/expected_verdicts.json").read_text()
    return json.loads(text)["claims"]

"""Acceptance criteria 1-13, one test each.

Every test prints a ``PASS criterion N`` or ``FAIL criterion N`` line to the
terminal (capture is bypassed so the lines show up in a plain ``pytest -v``).
Criteria 3 and 8 quote literal digits that disagree with their own oracles;
those tests assert every attainable part first and then report the literal
mismatch as an expected failure.
"""

import json
import math
import time
from fractions import Fraction

import mpmath
import pytest

from transcert import claims as cl
from transcert import curves as cv
from transcert import liouville as lv
from transcert import mpreal as mr
from transcert import ybe
from transcert.cli import main
from transcert.expr import VerdictKind
from transcert.mpreal import RInterval

T, F, C = VerdictKind.CERTIFIED_TRUE, VerdictKind.CERTIFIED_FALSE, VerdictKind.CONSISTENT_WITHIN

PI_55 = "3.141592653589793238462643383279502884197169399375105821"
E_55 = "2.718281828459045235360287471352662497757247093699959575"


@pytest.fixture
def say(capsys):
    def emit(n: int, failures: list[str]) -> None:
        line = f"PASS criterion {n}" if not failures else f"FAIL criterion {n}: " + "; ".join(failures)
        with capsys.disabled():
            print(f"\n{line}")
    return emit


def mid(iv: RInterval) -> float:
    return float(iv.mid())


def test_criterion_01_constants(say):
    mr.pi_fixed.cache_clear()
    mr.e_fixed.cache_clear()
    t0 = time.perf_counter()
    pi, e = mr.const_pi(200), mr.const_e(200)
    elapsed = time.perf_counter() - t0
    bad = []
    for name, iv, ref in (("pi", pi, PI_55), ("e", e, E_55)):
        if any(abs(end.to_fraction() - Fraction(ref)) >= Fraction(1, 10 ** 50) for end in (iv.lo, iv.hi)):
            bad.append(f"{name} digits")
        if iv.width_fraction() > Fraction(4, 2 ** 200):
            bad.append(f"{name} width")
    if elapsed >= 1:
        bad.append(f"runtime {elapsed:.2f}s")
    say(1, bad)
    assert not bad


def test_criterion_02_euler(say):
    rep = cl.run_claim("C01", 128, 128)
    lhs = rep.verdict.lhs
    bound = Fraction(1, 2 ** 96)
    # lhs is the real enclosure of |e^{i pi} + 1|
    lo, hi = lhs.re.lo.to_fraction(), lhs.re.hi.to_fraction()
    bad = []
    if rep.kind is not T:
        bad.append(f"verdict {rep.kind.value}")
    if not (0 <= lo and hi <= bound):
        bad.append(f"enclosure [{float(lo)}, {float(hi)}] not inside [0, 2^-96]")
    if not lhs.im.contains(0):
        bad.append("modulus has imaginary part")
    say(2, bad)
    assert not bad


def test_criterion_03_ei_minus_pi(say):
    t0 = time.perf_counter()
    c02 = cl.run_claim("C02", 128, 128)
    c03 = cl.run_claim("C03", 128, 128)
    elapsed = time.perf_counter() - t0
    modulus = c02.verdict.lhs.re
    angle = c03.details["angle"]
    oracle = mpmath.sqrt(1 + mpmath.pi ** 2 - 2 * mpmath.pi * mpmath.cos(1))
    b_oracle = mpmath.acos((1 + mpmath.pi ** 2 - mpmath.e ** 2) / (2 * mpmath.pi))

    # attainable parts: hard requirements
    assert modulus.width_fraction() <= Fraction(1, 10 ** 25)
    assert modulus.contains(Fraction(mpmath.nstr(oracle, 50)))  # oracle sqrt(1 + pi^2 - 2 pi cos 1)
    assert c02.kind is F
    assert any("disagrees" in n for n in c02.notes), "C02 report lacks the discrepancy note"
    assert c03.kind is T and angle.hi.to_fraction() < 1
    assert angle.contains(Fraction(mpmath.nstr(b_oracle, 50)))
    assert elapsed < 1, f"runtime {elapsed:.2f}s"

    # literal digits quoted by the criterion
    bad = []
    if not mpmath.nstr(mid(modulus), 10).startswith("2.7340107"):
        bad.append(f"midpoint is {mid(modulus):.10f}, not 2.7340107... (oracle gives {mpmath.nstr(oracle, 11)})")
    if not angle.contains(Fraction("0.98366")):
        bad.append(f"angle enclosure {angle} excludes 0.98366 (oracle {mpmath.nstr(b_oracle, 11)})")
    say(3, bad)
    if bad:
        pytest.xfail("literal digits in the criterion contradict its own oracle; see decision ledger")


def test_criterion_04_pi_i_identity(say):
    rep = cl.run_claim("C04", 128, 256)
    lhs, rhs = rep.verdict.lhs.re, rep.verdict.rhs.re
    bad = []
    if rep.kind is not T:
        bad.append(f"verdict {rep.kind.value}")
    if rep.verdict.eps != Fraction(1, 10 ** 30):
        bad.append(f"eps {rep.verdict.eps}")
    if rep.verdict.precision_used > 256:
        bad.append(f"precision {rep.verdict.precision_used}")
    if not lhs.overlaps(rhs):
        bad.append("sides do not share a value")
    if abs(mid(lhs) - 1.8958) > 5e-5 or abs(mid(rhs) - 1.8958) > 5e-5:
        bad.append(f"value {mid(lhs)} is not about 1.8958")
    if not any("0.95" in n for n in rep.notes):
        bad.append("0.95 note missing")
    say(4, bad)
    assert not bad


def test_criterion_05_exp_sum(say):
    t0 = time.perf_counter()
    c06 = cl.run_claim("C06")
    c05 = cl.run_claim("C05")
    bad = []
    if c06.kind is not T:
        bad.append(f"C06 verdict {c06.kind.value}")
    margin = c06.details["margin"]
    if abs(mid(margin) - 0.1558) > 5e-5:
        bad.append(f"margin {mid(margin)}")
    if c05.kind is not T or c05.details["points"] != 625 or c05.details["certified_points"] != 625:
        bad.append(f"grid {c05.details['certified_points']}/{c05.details['points']}")
    # |e^{1-z} + e^{conj z}| depends on Re z only
    for x in (Fraction(-3), Fraction(1, 2), Fraction(9, 4)):
        base = cl.exp_sum_modulus(x, Fraction(0), 128)
        real_form = mr.exp(RInterval.point(1 - x, 128)) + mr.exp(RInterval.point(x, 128))
        if not base.overlaps(real_form):
            bad.append(f"x={x}: modulus differs from e^(1-x)+e^x")
        for y in (Fraction(-3), Fraction(-1, 4), Fraction(7, 4), Fraction(3)):
            other = cl.exp_sum_modulus(x, y, 128)
            diff = other - base
            if not diff.contains_zero() or diff.width_fraction() > other.width_fraction() + base.width_fraction():
                bad.append(f"x={x}, y={y}: Im z changes the modulus")
    elapsed = time.perf_counter() - t0
    if elapsed >= 5:
        bad.append(f"runtime {elapsed:.2f}s")
    say(5, bad)
    assert not bad


def test_criterion_06_gauss(say):
    t0 = time.perf_counter()
    rep = cl.run_claim("C07", 128, 128)
    elapsed = time.perf_counter() - t0
    bad = []
    if rep.kind is not C:
        bad.append(f"verdict {rep.kind.value}")
    if rep.verdict.eps is None or rep.verdict.eps > Fraction(1, 10 ** 7):
        bad.append(f"eps {rep.verdict.eps}")
    if abs(mid(rep.verdict.rhs.re) - 1.77245385) > 5e-9:
        bad.append("rhs is not sqrt(pi)")
    if elapsed >= 10:
        bad.append(f"runtime {elapsed:.2f}s")
    say(6, bad)
    assert not bad


def test_criterion_07_integral_bound(say):
    rep = cl.run_claim("C08")
    cases = rep.details["cases"]
    bad = [f"case {k}: {v['verdict'].value}" for k, v in cases.items() if v["verdict"] is not T]
    if set(cases) != {"[0, 1]", "[-1, 2]", "[1, 3]"}:
        bad.append(f"cases {sorted(cases)}")
    disc = rep.details["discriminant"]
    if rep.details["discriminant_verdict"] is not T or not disc.hi.to_fraction() < 0:
        bad.append("discriminant not certified negative")
    if abs(mid(disc) - (-1.0035)) > 5e-5:
        bad.append(f"discriminant midpoint {mid(disc)}")
    say(7, bad)
    assert not bad


def test_criterion_08_scalars(say):
    for cid in ("C09", "C10", "C11"):
        assert cl.run_claim(cid).kind is T, cid
    rep = cl.run_claim("C12")
    r = rep.details["r_star"]
    # the bracket is exact rational arithmetic
    pi_sq_4 = mr.const_pi(128).sqr() / 4
    assert Fraction(5, 4) ** 4 == Fraction("2.44140625") and Fraction(6, 5) ** 5 == Fraction("2.48832")
    assert Fraction(5, 4) ** 4 < pi_sq_4.lo.to_fraction() and pi_sq_4.hi.to_fraction() < Fraction(6, 5) ** 5
    assert rep.kind is T and r.width_fraction() <= Fraction(1, 10 ** 6)

    oracle = mpmath.findroot(lambda x: (1 + 1 / x) ** x - mpmath.pi ** 2 / 4, 4.5)
    assert r.contains(Fraction(mpmath.nstr(oracle, 30)))  # bisection oracle

    bad = []
    if abs(mid(r) - 4.5074) > 5e-5:
        bad.append(f"midpoint {mid(r):.7f} is not about 4.5074 (oracle {mpmath.nstr(oracle, 10)})")
    say(8, bad)
    if bad:
        pytest.xfail("literal midpoint in the criterion contradicts its own oracle; see decision ledger")


def test_criterion_09_ybe(say):
    t0 = time.perf_counter()
    bad = []
    for alpha in (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)):
        J = ybe.alpha_family(alpha)
        r = ybe.j_report(J)
        if not r.exact or r.squares_to_minus_identity != 0 or r.commutation_12_23 != 0:
            bad.append(f"alpha={alpha}: exact identities")
        _, grid = ybe.ybe_grid(J, 1.0)
        worst = max(max(row) for row in grid)
        if len(grid) != 5 or worst > 1e-11:
            bad.append(f"alpha={alpha}: ybe residual {worst:.2e}")
        res = ybe.euler_matrix_residual(J)
        if res > 1e-12:
            bad.append(f"alpha={alpha}: euler residual {res:.2e}")
    m = ybe.j_report(ybe.majorana_J())
    if not m.exact or m.anticommutation_12_23 != 0 or m.commutation_12_23 == 0:
        bad.append("majorana (anti)commutator")
    elapsed = time.perf_counter() - t0
    if elapsed >= 5:
        bad.append(f"runtime {elapsed:.2f}s")
    say(9, bad)
    assert not bad


def test_criterion_10_matrix_inequality(say):
    s = ybe.fuzz_matrix_inequality(10_000, seed=0)
    below = ybe.fuzz_matrix_inequality(200, seed=0, trace_gt_pi=False)
    bad = []
    if s.samples != 10_000 or s.holds != s.samples or s.violations:
        bad.append(f"{s.samples - s.holds} of {s.samples} samples fail")
    if s.max_certificate_gap > 1e-12:
        bad.append(f"certificate gap {s.max_certificate_gap:.2e}")
    if not below.violations:
        bad.append("no trace < pi sample violates")
    say(10, bad)
    assert not bad


def test_criterion_11_curves(say):
    t0 = time.perf_counter()
    bad = []
    for d in cv.DEFINITIONS:
        m = cv.measures(cv.Circle(1.0), d)
        if abs(m.L / m.D - math.pi) > 1e-12 or abs(m.L / m.d - math.pi) > 1e-12:
            bad.append(f"circle under {d}")
    for d in cv.DEFINITIONS:
        rep = cv.conjecture_report(cv.Ellipse(2.0, 1.0), d)
        if abs(rep.measures.L - 9.688448) > 1e-5:
            bad.append(f"ellipse L {rep.measures.L}")
        if rep.holds_i != cv.HOLDS or rep.holds_iii != cv.HOLDS:
            bad.append(f"ellipse conjectures under {d}: {rep.holds_i}/{rep.holds_iii}")
    tri = cv.equilateral_triangle()
    chord = cv.conjecture_report(tri, cv.CHORD)
    if abs(chord.L_over_D - 3.4641) > 5e-5 or not chord.L_over_D > math.pi or chord.holds_i != cv.FAILS:
        bad.append(f"triangle chord L/D {chord.L_over_D}")
    width = cv.conjecture_report(tri, cv.WIDTH)
    if abs(width.L_over_D - 3) > 1e-9 or abs(width.L_over_d - 3.4641) > 5e-5:
        bad.append(f"triangle width L/D={width.L_over_D}, L/d={width.L_over_d}")
    found = cv.falsify_search("polygons", cv.WIDTH, 10_000, seed=0)
    iii = [c for c in found if "iii" in c.violated]
    if iii:
        bad.append(f"{len(iii)} violations of (iii)")
    elapsed = time.perf_counter() - t0
    if elapsed >= 30:
        bad.append(f"runtime {elapsed:.2f}s")
    say(11, bad)
    assert not bad


def test_criterion_12_liouville(say):
    bad = [f"witness n={n}" for n in range(1, 6) if not lv.approx_witness(n).holds]
    q = lv.liouville_quadratic()
    if q.root1 != -1 or q.root1_residual != 0:
        bad.append(f"root1 {q.root1}")
    if abs(mid(q.root2) + 0.5238118) > 5e-8:
        bad.append(f"root2 {mid(q.root2)}")
    if not q.residual.contains_zero():
        bad.append("residual excludes 0")
    say(12, bad)
    assert not bad


def test_criterion_13_determinism(say, capsys):
    def run():
        code = main(["verify", "all", "--json", "--precision", "128", "--seed", "0"])
        return code, capsys.readouterr().out

    first, second = run(), run()
    bad = []
    if first[0] != 0:
        bad.append(f"exit {first[0]}")
    if first[1] != second[1]:
        bad.append("outputs differ")
    if len(json.loads(first[1])) != 18:
        bad.append("missing reports")
    say(13, bad)
    assert not bad

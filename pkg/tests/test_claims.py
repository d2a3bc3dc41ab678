import json
from fractions import Fraction

import pytest

from conftest import encloses
from transcert import claims as cl
from transcert.errors import UnknownClaim
from transcert.expr import VerdictKind

T, F = VerdictKind.CERTIFIED_TRUE, VerdictKind.CERTIFIED_FALSE


@pytest.fixture(scope="module")
def reports():
    return {cid: cl.run_claim(cid) for cid in cl.CLAIM_IDS}


def test_registry_ids():
    assert cl.CLAIM_IDS == tuple(f"C{k:02d}" for k in range(1, 19))
    with pytest.raises(UnknownClaim):
        cl.run_claim("C19")


def test_verdicts_match_table(reports):
    table = cl.expected_verdicts()
    assert set(table) == set(cl.CLAIM_IDS)
    for cid, rep in reports.items():
        assert rep.kind.value == table[cid]["verdict"], cid


def test_lower_case_ids_accepted():
    assert cl.run_claim("c09").kind is T


def test_report_serialization(reports):
    for rep in reports.values():
        d = json.loads(rep.to_json())
        assert d["runtime_ms"] is None
        assert {"id", "statement", "verdict", "lhs", "rhs", "precision", "runtime_ms", "notes"} <= set(d)
        for side in (d["lhs"], d["rhs"]):
            assert side is None or all(isinstance(x, str) for x in side)
    assert json.loads(reports["C09"].to_json(timing=True))["runtime_ms"] is not None


def test_decimal_endpoints_are_outward(reports):
    lo, hi = reports["C02"].as_dict()["lhs"]
    assert Fraction(lo) <= reports["C02"].verdict.lhs.re.lo.to_fraction()
    assert Fraction(hi) >= reports["C02"].verdict.lhs.re.hi.to_fraction()


def test_disagreement_flagged_only_for_c02(reports):
    flagged = [cid for cid, r in reports.items() if any("disagrees" in n for n in r.notes)]
    assert flagged == ["C02"]


def test_cross_claim_consistency(reports):
    # B < 1 exactly when |e^i - pi| > e
    assert (reports["C03"].kind is T) == (reports["C02"].kind is F)


def test_determinism():
    a = cl.run_claim("C04").as_dict()
    b = cl.run_claim("C04").as_dict()
    assert a == b


def test_euler_shared_evaluator(reports):
    f = reports["C01"].details["f_pi_i_0"]
    assert f.lo.man >= 0 and f.hi.to_fraction() <= Fraction(1, 2 ** 96)


def test_ei_minus_pi_distance(reports):
    d = reports["C02"].details["distance"]
    assert encloses(d, "0.015723455263612876257211408875483026407602873657")
    f = reports["C02"].details["f_form"]
    assert f.overlaps(reports["C02"].verdict.lhs.re)


def test_triangle_angle():
    from transcert.mpreal import RInterval, const_pi
    one = RInterval.point(1, 128)
    angle = cl.triangle_angle(one, one, one)
    assert (angle * 3).overlaps(const_pi(128))


def test_exp_sum_points():
    e_plus_1 = cl.exp_sum_modulus(Fraction(0), Fraction(0), 128)
    assert encloses(e_plus_1, "3.718281828459045235360287471352662497757247")
    half = cl.exp_sum_modulus(Fraction(1, 2), Fraction(0), 128)
    shifted = cl.exp_sum_modulus(Fraction(1, 2), Fraction(7), 128)
    assert (half - shifted).contains_zero()
    v, details = cl.claim_exp_sum_grid(Fraction(1), 3)
    assert v.kind is T and details["points"] == 49


def test_exp_sum_minimum_at_half():
    from transcert import mpreal as mr
    from transcert.mpreal import RInterval

    def g(x):
        x = RInterval.point(x, 128)
        return mr.exp(1 - x) + mr.exp(x)

    mid = g(Fraction(1, 2))
    assert mid.hi < g(Fraction(2, 5)).lo and mid.hi < g(Fraction(3, 5)).lo


def test_r_threshold_coarse():
    kind, r, ends = cl.r_threshold(Fraction(1, 1000))
    assert kind is T and r.width_fraction() <= Fraction(1, 1000)
    assert abs(float(r.mid()) - 4.507) < 2e-3
    assert ends["g4"].hi.man < 0 < ends["g5"].lo.man


def test_xi_ix_details(reports):
    d = reports["C11"].details
    assert d["half_pi_vs_inv_e"] is T and d["sampled_bound_ok"]
    assert abs(d["sample_max_at"] - 2.718281828459045) < 1e-12


def test_c14_notes_monic_discrepancy(reports):
    assert any("9/10" in n for n in reports["C14"].notes)

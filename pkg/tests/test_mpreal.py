from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from conftest import PRECISIONS, encloses, mp_of, rationals
from transcert import mpreal as mr
from transcert.errors import DivisionByZeroInterval, DomainError
from transcert.mpreal import BigFloat, RInterval

PI_55 = "3.141592653589793238462643383279502884197169399375105821"
E_55 = "2.718281828459045235360287471352662497757247093699959575"
LN2 = "0.693147180559945309417232121458176568075500134"


# -- BigFloat ----------------------------------------------------------------

def test_bigfloat_canonical_odd_mantissa():
    b = BigFloat.make(12, 0)
    assert (b.man, b.exp) == (3, 2)
    assert BigFloat.make(0, 5) == BigFloat.make(0, -3)


@given(rationals(), PRECISIONS)
def test_from_fraction_directed(q, p):
    lo = BigFloat.from_fraction(q, p, False)
    hi = BigFloat.from_fraction(q, p, True)
    assert lo.to_fraction() <= q <= hi.to_fraction()
    assert abs(lo.man).bit_length() <= p and abs(hi.man).bit_length() <= p


@given(rationals(), rationals(), PRECISIONS)
def test_directed_ops_bracket_exact(a, b, p):
    x = BigFloat.from_fraction(a, 200, False)
    y = BigFloat.from_fraction(b, 200, False)
    xa, ya = x.to_fraction(), y.to_fraction()
    for op, exact in ((mr.bf_add, xa + ya), (mr.bf_sub, xa - ya), (mr.bf_mul, xa * ya)):
        assert op(x, y, p, False).to_fraction() <= exact <= op(x, y, p, True).to_fraction()
    if ya != 0:
        q = xa / ya
        assert mr.bf_div(x, y, p, False).to_fraction() <= q <= mr.bf_div(x, y, p, True).to_fraction()


def test_add_tiny_addend_rounds_directionally():
    one = BigFloat.make(1)
    tiny = BigFloat.make(1, -500)
    assert mr.bf_add(one, tiny, 53, False) == one
    assert mr.bf_add(one, tiny, 53, True) > one
    assert mr.bf_add(one, -tiny, 53, False) < one


# -- constants -----------------------------------------------------------------

@pytest.mark.parametrize("p", [24, 53, 100, 200, 333])
def test_pi_e_ln2_enclose_oracle(p):
    for iv, ref in ((mr.const_pi(p), mpmath.pi), (mr.const_e(p), mpmath.e),
                    (mr.const_ln2(p), mpmath.log(2))):
        assert encloses(iv, ref)
        assert iv.width_fraction() <= Fraction(4, 2 ** p)


def test_constant_digits_at_200_bits():
    """Both endpoints agree with the published expansions to 50 decimals."""
    for iv, ref in ((mr.const_pi(200), PI_55), (mr.const_e(200), E_55)):
        for end in (iv.lo, iv.hi):
            assert abs(end.to_fraction() - Fraction(ref)) < Fraction(1, 10 ** 50)
    assert abs(mr.const_ln2(160).mid() - Fraction(LN2)) < Fraction(1, 10 ** 44)


def test_below_min_precision_rejected():
    with pytest.raises(ValueError):
        mr.const_pi(16)


# -- interval arithmetic -----------------------------------------------------

def test_point_of_decimal_literal_is_outward():
    x = RInterval.from_decimal("0.1", 53)
    assert x.lo.to_fraction() < Fraction(1, 10) < x.hi.to_fraction()
    assert RInterval.point(Fraction(3, 4), 53).is_point()


def test_division_by_interval_containing_zero():
    with pytest.raises(DivisionByZeroInterval):
        RInterval.point(1, 53) / RInterval.of(-1, 1, 53)
    with pytest.raises(ZeroDivisionError):
        RInterval.point(1, 53) / RInterval.point(0, 53)


@given(rationals(), rationals(), rationals(), rationals(), PRECISIONS)
def test_arith_containment(a, b, c, d, p):
    x = RInterval.of(min(a, b), max(a, b), p)
    y = RInterval.of(min(c, d), max(c, d), p)
    samples_x = (min(a, b), max(a, b), (a + b) / 2)
    samples_y = (min(c, d), max(c, d), (c + d) / 2)
    for u in samples_x:
        for v in samples_y:
            assert (x + y).contains(u + v)
            assert (x - y).contains(u - v)
            assert (x * y).contains(u * v)
            if not y.contains_zero():
                assert (x / y).contains(u / v)


@given(rationals(-5, 5), st.integers(0, 7))
def test_integer_power_tighter_than_repeated_product(q, n):
    x = RInterval.of(q - Fraction(1, 8), q + Fraction(1, 8), 64)
    pw = x ** n
    assert pw.contains((q - Fraction(1, 8)) ** n) and pw.contains(q ** n)
    if n % 2 == 0:
        assert pw.lo.man >= 0


def test_sqr_of_straddling_interval_is_nonnegative():
    x = RInterval.of(-1, 2, 53)
    assert x.sqr().lo.man == 0 and x.sqr().contains(4)
    assert abs(RInterval.of(-3, 1, 53)).contains(3)


def test_to_decimal_is_directed():
    x = RInterval.point(Fraction(1, 3), 128)
    lo, hi = x.decimal_bounds(10)
    assert Fraction(lo) <= Fraction(1, 3) <= Fraction(hi)
    big = RInterval.point(10 ** 20, 64)
    assert "e" in big.decimal_bounds(5)[0]


def test_certified_compare():
    pi, e = mr.const_pi(64), mr.const_e(64)
    assert mr.certified_compare(e, pi) == mr.Ordering.LESS
    assert mr.certified_compare(pi, e) == mr.Ordering.GREATER
    assert mr.certified_compare(pi, pi) == mr.Ordering.OVERLAP


# -- elementary functions ----------------------------------------------------

FUNCS = [
    ("exp", mr.exp, mpmath.exp, lambda q: -60 < q < 60),
    ("ln", mr.ln, mpmath.log, lambda q: q > 0),
    ("sqrt", mr.sqrt, mpmath.sqrt, lambda q: q >= 0),
    ("sin", mr.sin, mpmath.sin, lambda q: True),
    ("cos", mr.cos, mpmath.cos, lambda q: True),
    ("atan", mr.atan, mpmath.atan, lambda q: True),
    ("acos", mr.acos, mpmath.acos, lambda q: -1 <= q <= 1),
]


@pytest.mark.parametrize("name,f,ref,dom", FUNCS, ids=[f[0] for f in FUNCS])
@given(q=rationals(), p=PRECISIONS)
def test_point_containment_against_oracle(name, f, ref, dom, q, p):
    if name == "acos":
        q = q / 50
    assume(dom(q))
    iv = f(RInterval.point(q, p))
    assert encloses(iv, ref(mp_of(q)))


@pytest.mark.parametrize("name,f,ref,dom", FUNCS, ids=[f[0] for f in FUNCS])
@given(q=rationals(-8, 8), p=PRECISIONS)
def test_dyadic_point_width_is_a_few_ulps(name, f, ref, dom, q, p):
    if name == "acos":
        q = q / 8
    assume(dom(q))
    x = RInterval.point(BigFloat.from_fraction(q, 40, False), p)
    iv = f(x)
    v = abs(ref(mp_of(x.lo.to_fraction())))
    if v == 0:
        return
    assert iv.width_fraction() <= 8 * Fraction(2) ** (int(mpmath.floor(mpmath.log(v, 2))) + 1 - p)


@given(rationals(-20, 20), rationals(0, 1), PRECISIONS)
def test_monotone_refinement(q, r, p):
    """A sub-interval's image lies in the image of the containing interval."""
    outer = RInterval.of(q - 1, q + 1, p)
    inner = RInterval.of(q - r, q + r, p)
    for f in (mr.exp, mr.sin, mr.cos, mr.atan):
        assert f(outer).contains(f(inner))


@given(rationals(-30, 30), PRECISIONS)
def test_sin_cos_pythagoras(q, p):
    x = RInterval.point(q, p)
    assert (mr.sin(x).sqr() + mr.cos(x).sqr()).contains(1)


@given(rationals(-30, 30), PRECISIONS)
def test_exp_ln_round_trip(q, p):
    assert mr.ln(mr.exp(RInterval.point(q, p))).contains(q)


def test_sin_interval_covers_critical_points():
    p = 64
    pi = mr.const_pi(p)
    x = RInterval(mr.bf_mul(pi.lo, BigFloat.make(1, -1), p, False),
                  mr.bf_mul(pi.hi, BigFloat.make(3, -1), p, True), p)  # [pi/2, 3pi/2]
    s = mr.sin(x)
    assert s.contains(1) and s.contains(-1)
    c = mr.cos(RInterval.of(-1, 1, p))
    assert c.contains(1) and c.hi.to_fraction() <= 1


def test_trig_known_values():
    p = 128
    pi = mr.const_pi(p)
    assert mr.sin(pi).contains(0) and mr.cos(pi).contains(-1)
    assert encloses(mr.acos(RInterval.point(Fraction(1, 2), p)) * 3, mpmath.pi)
    assert encloses(mr.atan(RInterval.point(1, p)) * 4, mpmath.pi)
    assert encloses(mr.atan(RInterval.point(10 ** 6, p)), mpmath.atan(10 ** 6))


def test_atan2_quadrants():
    p = 64
    one, neg = RInterval.point(1, p), RInterval.point(-1, p)
    assert encloses(mr.atan2(one, neg), 3 * mpmath.pi / 4)
    assert encloses(mr.atan2(neg, neg), -3 * mpmath.pi / 4)


def test_domain_errors():
    with pytest.raises(DomainError):
        mr.ln(RInterval.of(-1, 1, 53))
    with pytest.raises(DomainError):
        mr.sqrt(RInterval.point(-1, 53))
    with pytest.raises(DomainError):
        mr.acos(RInterval.point(2, 53))


def test_exp_of_wide_negative_interval():
    iv = mr.exp(RInterval.of(-1000, 0, 64))
    assert iv.lo.man >= 0 and iv.contains(1)


def test_pow_real():
    iv = mr.pow_real(RInterval.point(2, 128), RInterval.point(Fraction(1, 2), 128))
    assert encloses(iv, mpmath.sqrt(2))


def test_dispatchers():
    a, b = RInterval.point(3, 64), RInterval.point(4, 64)
    assert mr.arith(a, b, "*").contains(12)
    assert encloses(mr.elem(a, "ln"), mpmath.log(3))

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import encloses
from transcert.errors import BranchCutError, ExprSyntaxError, NonRealComparand, UnknownIdentifier
from transcert.expr import (Binary, Call, Compare, Const, Neg, Num, VerdictKind, certify, evaluate,
                            parse, pretty, tokenize)

ROUND_TRIP = [
    "1", "pi", "e", "i", "-1", "--2", "1 + 2 * 3", "(1 + 2) * 3", "2^3^2", "-2^2",
    "2^-1", "e^(i*pi) + 1", "abs(exp(i) - pi)", "pi^i - i^pi", "sqrt(pi)", "ln(sqrt(pi))",
    "2*sin(pi^2/4 - ln(sqrt(pi)))", "re(exp(i))", "im(conj(1 + i))", "cos(1/3)",
    "1.5e3 / 0.25", ".5 + 5.", "pi^2 < 4*e", "pi^3 > 4*e^2", "abs(exp(pi*i)+1) ~= 0",
    "1 ~=[1e-30] 1", "exp(1 - 2) - e^-1", "ln(2)*3",
    "-(1 - 2) / -(3)", "sqrt(2)^2 ~=[0.001] 2",
]


def test_precedence():
    assert parse("2^3^2") == Binary("^", Num("2"), Binary("^", Num("3"), Num("2")))
    assert parse("-2^2") == Neg(Binary("^", Num("2"), Num("2")))
    assert parse("1 + 2 * 3") == Binary("+", Num("1"), Binary("*", Num("2"), Num("3")))
    assert parse("1 - 2 - 3") == Binary("-", Binary("-", Num("1"), Num("2")), Num("3"))
    assert parse("2^-1") == Binary("^", Num("2"), Neg(Num("1")))
    assert parse("exp(i)") == Call("exp", Const("i"))


def test_comparison_with_tolerance():
    node = parse("pi ~=[1e-5] 3.14159")
    assert isinstance(node, Compare) and node.eps == "1e-5"
    assert parse("1 < 2").op == "<"


@pytest.mark.parametrize("src", ROUND_TRIP)
def test_pretty_round_trip(src):
    node = parse(src)
    assert parse(pretty(node)) == node


@given(st.recursive(
    st.sampled_from(["1", "2.5", "pi", "e", "i"]),
    lambda inner: st.one_of(
        st.tuples(inner, st.sampled_from("+-*/^"), inner).map(lambda t: f"({t[0]}) {t[1]} ({t[2]})"),
        st.tuples(st.sampled_from(["exp", "sin", "abs", "conj"]), inner).map(lambda t: f"{t[0]}({t[1]})"),
        inner.map(lambda s: f"-{s}"),
    ), max_leaves=8))
def test_pretty_round_trip_generated(src):
    node = parse(src)
    assert parse(pretty(node)) == node


@pytest.mark.parametrize("src,offset", [
    ("1 +", 3), ("(1 + 2", 6), ("2 $ 3", 2), ("foo(1)", 0), ("1 + bar", 4),
    ("π + 1", 0), ("1 + π", 4), ("ππ", 0), ("1 2", 2), ("exp 1", 4),
])
def test_syntax_error_byte_offsets(src, offset):
    with pytest.raises(ExprSyntaxError) as err:
        parse(src)
    assert err.value.offset == offset


def test_offsets_count_utf8_bytes():
    # 'é' is two bytes in UTF-8
    with pytest.raises(ExprSyntaxError) as err:
        parse("1 + é")
    assert err.value.offset == 4
    toks = tokenize("1 +  2")
    assert [t.offset for t in toks] == [0, 2, 5, 6]


def test_unknown_identifier_is_syntax_error():
    with pytest.raises(UnknownIdentifier):
        parse("tau")


def test_number_literals_are_exact():
    assert parse("0.1").value == Fraction(1, 10)
    z = evaluate("0.1 * 10 - 1", 53)
    assert z.re.contains(0) and z.re.width_fraction() < Fraction(1, 2 ** 50)
    assert evaluate("0.5 * 4", 53).re.is_point()


@pytest.mark.parametrize("src,ref", [
    ("abs(exp(i) - pi)", mpmath.fabs(mpmath.exp(1j) - mpmath.pi)),
    ("2*sin(pi^2/4 - ln(sqrt(pi)))", 2 * mpmath.sin(mpmath.pi ** 2 / 4 - mpmath.log(mpmath.sqrt(mpmath.pi)))),
    ("abs(pi^i - i^pi)", mpmath.fabs(mpmath.pi ** 1j - (1j) ** mpmath.pi)),
    ("2^(1/2)", mpmath.sqrt(2)),
    ("e^(1/3)", mpmath.exp(mpmath.mpf(1) / 3)),
    ("re((1 + i)^5)", -4),
    ("im(conj(2 - 3*i))", 3),
    ("cos(1)^2 + sin(1)^2", 1),
])
def test_evaluate_against_oracle(src, ref):
    z = evaluate(src, 128)
    assert encloses(z.re, mpmath.re(ref))


def test_evaluate_branch_cut():
    with pytest.raises(BranchCutError):
        evaluate("ln(-1)", 64)
    with pytest.raises(ValueError):
        evaluate("1", 8)


@pytest.mark.parametrize("claim,kind", [
    ("pi^2 < 4*e", VerdictKind.CERTIFIED_TRUE),
    ("pi^3 > 4*e^2", VerdictKind.CERTIFIED_TRUE),
    ("abs(exp(i) - pi) < e", VerdictKind.CERTIFIED_FALSE),
    ("e > pi", VerdictKind.CERTIFIED_FALSE),
    ("abs(pi^i - i^pi) ~=[1e-30] 2*sin(pi^2/4 - ln(sqrt(pi)))", VerdictKind.CERTIFIED_TRUE),
    ("pi ~=[1e-3] 3.14", VerdictKind.CERTIFIED_FALSE),
    ("pi ~=[0.01] 3.14", VerdictKind.CERTIFIED_TRUE),
])
def test_certify(claim, kind):
    assert certify(claim).kind is kind


def test_certify_undecided_at_equality():
    v = certify("pi < pi", 64, 128)
    assert v.kind is VerdictKind.UNDECIDED and v.precision_used == 128


def test_certify_escalates_precision():
    # the two sides differ by about 1e-30, unresolvable at 64 bits
    v = certify("pi + 10^-30 > pi", 64, 512)
    assert v.kind is VerdictKind.CERTIFIED_TRUE and v.precision_used > 64


def test_default_tolerance_is_half_precision():
    v = certify("pi ~= pi", 128)
    assert v.kind is VerdictKind.CERTIFIED_TRUE and v.eps == Fraction(1, 2 ** 64)


def test_non_real_comparand():
    with pytest.raises(NonRealComparand):
        certify("exp(i) < 2")


def test_certify_needs_comparison():
    with pytest.raises(TypeError):
        certify("pi")

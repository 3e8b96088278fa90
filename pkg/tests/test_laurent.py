from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qmatrix.laurent import (
    ONE,
    Q,
    ZERO,
    LaurentPoly,
    NotDivisibleError,
    eval_q_one,
    exact_div_q_minus_one,
    neg_q_integer,
    pow_neg_q,
    qhat,
    render,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=5).map(LaurentPoly)


def lp(**kw):
    # lp(e2=1, em1=3) -> q^2 + 3 q^-1
    out = {}
    for k, c in kw.items():
        e = -int(k[2:]) if k.startswith("em") else int(k[1:])
        out[e] = c
    return LaurentPoly(out)


def test_canonical_form_drops_zero_coefficients():
    assert LaurentPoly({3: 0, 1: 2}).terms == {1: 2}
    assert LaurentPoly({0: 0}) == ZERO
    assert LaurentPoly(0).is_zero()


def test_basic_ring_values():
    assert Q + Q ** -1 == lp(e1=1, em1=1)
    assert (Q - Q ** -1) * (Q + Q ** -1) == lp(e2=1, em2=-1)
    assert qhat() * qhat() == lp(e2=1, e0=-2, em2=1)


def test_qhat():
    assert qhat() == lp(e1=1, em1=-1)
    assert eval_q_one(qhat()) == 0
    assert qhat() * -1 == lp(e1=-1, em1=1)


def test_pow_neg_q():
    assert pow_neg_q(0) == ONE
    assert pow_neg_q(-3) == LaurentPoly({-3: -1})
    assert pow_neg_q(2) == LaurentPoly({2: 1})


def test_neg_q_integer_values():
    assert neg_q_integer(1) == ONE
    assert neg_q_integer(2) == lp(e1=-1, em1=-1)
    assert neg_q_integer(3) == lp(e2=1, e0=1, em2=1)


@pytest.mark.parametrize("d", [0, -1])
def test_neg_q_integer_rejects_nonpositive(d):
    with pytest.raises(ValueError):
        neg_q_integer(d)


def test_division_by_q_minus_one():
    assert exact_div_q_minus_one(lp(e2=1, e0=-1)) == lp(e1=1, e0=1)
    assert exact_div_q_minus_one(ZERO) == ZERO
    assert exact_div_q_minus_one(qhat()) == lp(em1=1, e0=1)


def test_division_failure_is_its_own_error():
    with pytest.raises(NotDivisibleError):
        exact_div_q_minus_one(Q)
    assert issubclass(NotDivisibleError, ArithmeticError)


def test_eval_q_one():
    assert eval_q_one(Q + Q ** -1) == 2
    assert eval_q_one(qhat()) == 0
    assert eval_q_one(neg_q_integer(3)) == 3


def test_rendering_grammar():
    assert render(lp(e2=1, e0=-2, em2=1)) == "q^2 - 2 + q^-2"
    assert render(Q) == "q"
    assert render(Q ** -1) == "q^-1"
    assert render(LaurentPoly({2: 3})) == "3*q^2"
    assert render(LaurentPoly({0: -5})) == "-5"
    assert render(ZERO) == "0"
    assert render(lp(e1=-1, em1=-1)) == "-q - q^-1"


def test_negative_power_of_non_unit_rejected():
    with pytest.raises(ValueError):
        qhat() ** -1


def test_evaluate_is_exact():
    assert qhat().evaluate(2) == Fraction(3, 2)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys)
def test_division_round_trip(p):
    s = exact_div_q_minus_one(p * (Q - 1))
    assert s == p
    assert s * (Q - 1) == p * (Q - 1)


@given(polys)
def test_mirror_is_involution(p):
    assert p.mirror().mirror() == p


@given(st.integers(1, 12))
def test_neg_q_integer_mirror_invariant(d):
    assert neg_q_integer(d).mirror() == neg_q_integer(d)


@given(st.integers(1, 12))
def test_even_power_sum_factorisation(d):
    lhs = LaurentPoly({2 * k: 1 for k in range(d)})
    assert lhs == pow_neg_q(d - 1) * neg_q_integer(d)


@given(polys, st.integers(-5, 5))
def test_evaluate_is_a_homomorphism(p, k):
    x = Fraction(3, 2)
    assert (p * p.shift(k)).evaluate(x) == p.evaluate(x) * p.shift(k).evaluate(x)

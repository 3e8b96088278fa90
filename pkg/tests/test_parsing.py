import pytest
from hypothesis import given, settings, strategies as st

from qmatrix.algebra import AlgebraElement
from qmatrix.laurent import LaurentPoly, Q, qhat, render
from qmatrix.minors import quantum_minor
from qmatrix.parsing import ParseError, parse_expression, parse_laurent, parse_minor
from qmatrix.relations import gen_pair_relation


def X(n, i, j):
    return AlgebraElement.generator(n, i, j)


def test_products_and_sums():
    n = 2
    assert parse_expression("X[1,2]*X[1,1]", n) == X(n, 1, 2) * X(n, 1, 1)
    assert parse_expression("X[2,2] X[1,1]", n) == X(n, 2, 2) * X(n, 1, 1)
    assert parse_expression("-X[1,1] + 2*X[1,2]", n) == X(n, 1, 2).scale(2) - X(n, 1, 1)
    assert parse_expression("(X[1,1] + X[2,2])^2", n) == (X(n, 1, 1) + X(n, 2, 2)) * (X(n, 1, 1) + X(n, 2, 2))


def test_scalars():
    n = 2
    assert parse_expression("q^-2*X[1,1]", n) == X(n, 1, 1).scale(Q ** -2)
    assert parse_expression("qhat^2", n) == AlgebraElement.scalar(n, qhat() ** 2)
    assert parse_expression("(-q)^-3", n) == AlgebraElement.scalar(n, -(Q ** -3))


def test_minor_literals():
    assert parse_expression("[12|12]", 2) == quantum_minor([1, 2], [1, 2], 2)
    assert parse_expression("[1,3|2,3]", 3) == quantum_minor([1, 3], [2, 3], 3)
    assert parse_minor("23|12", 4) == ((2, 3), (1, 2))


def test_laurent_literals():
    assert parse_laurent("q^2 - 2 + q^-2") == qhat() ** 2
    assert parse_laurent("-q - q^-1") == LaurentPoly({1: -1, -1: -1})
    with pytest.raises(ParseError):
        parse_laurent("X[1,1]")


@pytest.mark.parametrize(
    "src,pos",
    [
        ("X[1,1] +", 8),
        ("X[3,1]", 0),
        ("X[1,1] $ 2", 7),
        ("(X[1,1]", 7),
        ("qhat^-1", 4),
        ("", 0),
        ("X[1,1]^q", 7),
    ],
)
def test_errors_carry_positions(src, pos):
    with pytest.raises(ParseError) as info:
        parse_expression(src, 2)
    assert info.value.pos == pos


def test_bad_minor_literal():
    with pytest.raises(ParseError):
        parse_expression("[12|1]", 2)
    with pytest.raises(ValueError):
        parse_minor("12", 2)


gens2 = st.tuples(st.integers(1, 2), st.integers(1, 2))
coeffs = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), min_size=1, max_size=3).map(LaurentPoly)
elements = st.lists(st.tuples(st.lists(gens2, max_size=3), coeffs), max_size=3).map(
    lambda ts: sum((AlgebraElement.word(2, w, c) for w, c in ts), AlgebraElement.zero(2))
)


@settings(max_examples=150, deadline=None)
@given(elements)
def test_render_round_trip(a):
    assert parse_expression(str(a), 2) == a


@settings(max_examples=100, deadline=None)
@given(coeffs)
def test_laurent_round_trip(p):
    assert parse_laurent(render(p)) == p


def test_relation_text_sides_reparse():
    rel = gen_pair_relation("C6_4", [2, 3], [1, 3], [1, 4], [2, 4], 4)
    lhs, rhs = rel.render_text().split(" = ")
    assert (parse_expression(lhs, 4) - parse_expression(rhs, 4)).is_zero()

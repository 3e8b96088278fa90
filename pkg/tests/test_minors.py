import random
from itertools import combinations

import pytest

from qmatrix.algebra import AlgebraElement
from qmatrix.indexsets import IndexSet, omega0, subsets
from qmatrix.laurent import Q
from qmatrix.minors import (
    Minor,
    anti_transpose_map,
    laplace_col_check,
    laplace_row_check,
    minor_coproduct,
    quantum_minor,
    quantum_minor_columnwise,
    transpose_map,
)


def all_minors(n, max_size=None):
    top = n if max_size is None else max_size
    return [(R, C) for k in range(1, top + 1) for R in subsets(n, k) for C in subsets(n, k)]


def random_element(rng, n, terms=3, length=3):
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out = AlgebraElement.zero(n)
    for _ in range(terms):
        w = [rng.choice(gens) for _ in range(rng.randint(0, length))]
        out = out + AlgebraElement.word(n, w, rng.randint(-3, 3))
    return out


def test_minor_examples():
    n = 2
    assert quantum_minor([2], [1], n) == AlgebraElement.generator(n, 2, 1)
    expected = AlgebraElement.word(n, [(1, 1), (2, 2)]) - AlgebraElement.word(n, [(1, 2), (2, 1)], Q)
    assert quantum_minor([1, 2], [1, 2], n) == expected


def test_minor_descriptor_validation():
    with pytest.raises(ValueError):
        Minor([1, 2], [1])
    with pytest.raises(ValueError):
        Minor([], [])
    with pytest.raises(ValueError):
        quantum_minor([1, 5], [1, 2], 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_row_and_column_expansions_agree(n):
    for R, C in all_minors(n):
        assert quantum_minor(R, C, n) == quantum_minor_columnwise(R, C, n)


def test_minor_grading():
    n = 4
    for R, C in all_minors(n):
        rows = tuple(int(i in R) for i in range(1, n + 1))
        cols = tuple(int(j in C) for j in range(1, n + 1))
        assert quantum_minor(R, C, n).grading() == (rows, cols)


def test_transpose_and_anti_transpose_on_minors():
    for n in (2, 3, 4):
        for R, C in all_minors(n):
            d = quantum_minor(R, C, n)
            assert transpose_map(d) == quantum_minor(C, R, n)
            assert anti_transpose_map(d) == quantum_minor(omega0(R, n), omega0(C, n), n)


def test_transpose_is_automorphism_and_anti_transpose_anti():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 4)
        a, b = random_element(rng, n), random_element(rng, n)
        assert transpose_map(a * b) == transpose_map(a) * transpose_map(b)
        assert anti_transpose_map(a * b) == anti_transpose_map(b) * anti_transpose_map(a)
        assert transpose_map(transpose_map(a)) == a
        assert anti_transpose_map(anti_transpose_map(a)) == a


def test_generators_in_rows_and_columns_are_central_for_the_minor():
    n = 4
    for R, C in all_minors(n):
        d = quantum_minor(R, C, n)
        for i in R:
            for j in C:
                g = AlgebraElement.generator(n, i, j)
                assert g * d == d * g


def _splits(I):
    k = len(I)
    for a in range(1, k):
        for A in combinations(I, a):
            for B in combinations(I, k - a):
                yield IndexSet(A), IndexSet(B)


def test_laplace_examples():
    n = 2
    assert laplace_row_check([1, 2], [1, 2], [1], [2], n)
    assert laplace_row_check([1, 2], [1, 2], [1], [1], n)
    assert laplace_col_check([1, 2], [1, 2], [2], [2], n)
    with pytest.raises(ValueError):
        laplace_row_check([1, 2], [1, 2], [1], [], n)


@pytest.mark.parametrize("n", [2, 3])
def test_laplace_relations_exhaustive_small(n):
    for R, C in all_minors(n):
        for A, B in _splits(R):
            assert laplace_row_check(R, C, A, B, n)
        for A, B in _splits(C):
            assert laplace_col_check(R, C, A, B, n)


def test_coproduct():
    assert minor_coproduct([1], [2], 2) == [(Minor([1], [1]), Minor([1], [2])), (Minor([1], [2]), Minor([2], [2]))]
    assert len(minor_coproduct([1, 3], [2, 4], 5)) == 10


def test_memo_returns_same_value():
    assert quantum_minor([1, 2], [2, 3], 3) is quantum_minor([1, 2], [2, 3], 3)

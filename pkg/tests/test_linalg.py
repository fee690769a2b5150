"""Exact elimination: echelon forms, kernels, weighted complements."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from qsteenrod.errors import InhomogeneousError, InvalidWeightError
from qsteenrod.linalg import Matrix, echelonize, kernel, weighted_complement
from qsteenrod.polynomials import Polynomial, monomials_of_degree
from qsteenrod.scalars import RF_ONE, RF_Q, RF_ZERO, rf_normalize


def x(n, i):
    return Polynomial.variable(n, i)


def test_echelonize_plus_minus():
    basis = echelonize([x(2, 1) + x(2, 2), x(2, 1) - x(2, 2)])
    assert basis == [x(2, 1), x(2, 2)]
    assert [p.leading_monomial() for p in basis] == [(1, 0), (0, 1)]


def test_echelonize_drops_dependent_rows():
    basis = echelonize([x(2, 1), 2 * x(2, 1)])
    assert basis == [x(2, 1)]


def test_echelonize_line_over_field():
    # (q-1) x1 and q x1 span the same line over Q(q); oracle: rank is 1
    a = x(2, 1).scale(RF_Q - 1)
    b = x(2, 1).scale(RF_Q)
    m = Matrix(2, 2, [[RF_Q - 1, RF_ZERO], [RF_Q, RF_ZERO]])
    assert m.rank() == 1
    assert echelonize([a, b]) == [x(2, 1)]


def test_echelonize_rejects_mixed_degrees():
    with pytest.raises(InhomogeneousError):
        echelonize([x(2, 1), x(2, 1) * x(2, 2)])


def test_echelonize_idempotent():
    polys = [
        x(3, 1) ** 2 + RF_Q * (x(3, 2) * x(3, 3)),
        x(3, 2) ** 2 - x(3, 1) * x(3, 3),
        x(3, 1) ** 2 + x(3, 2) ** 2,
    ]
    once = echelonize(polys)
    twice = echelonize(once)
    assert once == twice
    leads = [p.leading_monomial() for p in once]
    assert leads == sorted(leads, reverse=True)


def test_kernel_identity():
    m = Matrix(3, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert kernel(m) == []


def test_kernel_one_by_two():
    m = Matrix(1, 2, [[RF_ONE, RF_Q]])
    assert kernel(m) == [(-RF_Q, RF_ONE)]


def test_kernel_proportional_rows():
    m = Matrix(2, 2, [[RF_ONE, RF_ONE], [RF_Q, RF_Q]])
    vecs = kernel(m)
    assert len(vecs) == 1
    v = vecs[0]
    # spans the line through (1, -1)
    assert v[0] * (-RF_ONE) == v[1]


coeff = st.integers(-6, 6)
linpoly = st.tuples(coeff, coeff, coeff, coeff).map(
    lambda c: rf_normalize(c, (1,))
)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.data(),
)
def test_rank_nullity(rows, cols, data):
    entries = [
        [data.draw(linpoly) for _ in range(cols)] for _ in range(rows)
    ]
    m = Matrix(rows, cols, entries)
    assert m.rank() + len(kernel(m)) == cols


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_kernel_vectors_annihilate(rows, cols, data):
    entries = [
        [data.draw(linpoly) for _ in range(cols)] for _ in range(rows)
    ]
    m = Matrix(rows, cols, entries)
    for vec in kernel(m):
        for row in entries:
            acc = RF_ZERO
            for a, v in zip(row, vec):
                acc = acc + a * v
            assert acc == RF_ZERO


def test_weighted_complement_symmetric_line():
    comp = weighted_complement([x(2, 1) + x(2, 2)], 2, 1, lambda m: 1)
    assert comp == [x(2, 1) - x(2, 2)]


def test_weighted_complement_of_full_space_is_zero():
    full = [Polynomial.monomial(2, m) for m in monomials_of_degree(2, 2)]
    assert weighted_complement(full, 2, 2, lambda m: 1) == []


def test_weighted_complement_univariate():
    assert weighted_complement([x(1, 1) ** 2], 1, 2, lambda m: 1) == []


def test_weighted_complement_rejects_bad_weight():
    with pytest.raises(InvalidWeightError):
        weighted_complement([x(2, 1)], 2, 1, lambda m: 0)


def test_weighted_complement_involution():
    rng = random.Random(7)
    from qsteenrod.polynomials import factorial_weight

    for n, d in [(2, 2), (2, 3), (3, 2), (3, 4)]:
        monos = monomials_of_degree(n, d)
        polys = []
        for _ in range(rng.randint(1, len(monos) - 1)):
            terms = {
                m: rf_normalize((rng.randint(-4, 4), rng.randint(-2, 2)), (1,))
                for m in monos
            }
            polys.append(Polynomial(n, terms))
        v = echelonize(polys)
        if not v:
            continue
        comp = weighted_complement(v, n, d, factorial_weight)
        assert len(comp) == len(monos) - len(v)
        back = weighted_complement(comp, n, d, factorial_weight)
        assert back == v

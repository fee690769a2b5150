"""Specialization lemmas, content-free bases, rank-drop detection."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from qsteenrod.errors import PoleError
from qsteenrod.linalg import Matrix, sparse_rank
from qsteenrod.polynomials import Polynomial, monomials_of_degree, scalar_product
from qsteenrod.scalars import (
    IntPoly,
    QParam,
    RF_ONE,
    RF_Q,
    qp,
    qp_eval,
    qp_gcd,
    qp_mul,
    qp_primitive,
)
from qsteenrod.spaces import GradedSubspace, harm_component
from qsteenrod.specialize import (
    bad_q_candidates,
    conjectured_root_form,
    content_free_basis,
    evaluate_rows,
    factor_over_z,
    harmonic_constraint_rows,
    minor_gcd,
    rational_roots,
    specialize_poly,
    specialized_dimension,
)

FORMAL = QParam.formal()


def x(n, i):
    return Polynomial.variable(n, i)


def test_specialize_poly_examples():
    p = x(1, 1).scale(RF_Q + 1)
    assert specialize_poly(p, Fraction(0)) == x(1, 1)
    pole = x(1, 1).scale(RF_ONE / (RF_Q - 1))
    with pytest.raises(PoleError):
        specialize_poly(pole, Fraction(1))
    cancel = x(1, 1).scale((RF_Q * RF_Q - 1) / (RF_Q - 1))
    assert specialize_poly(cancel, Fraction(1)) == x(1, 1).scale(2)


def test_content_free_basis_strips_content():
    v = GradedSubspace.from_spanning(1, 1, [x(1, 1).scale(RF_Q - 1)])
    assert content_free_basis(v) == [x(1, 1)]
    plain = GradedSubspace.from_spanning(2, 1, [x(2, 1) - x(2, 2)])
    assert content_free_basis(plain) == [x(2, 1) - x(2, 2)]


def test_content_free_basis_specializes_to_independent_vectors():
    v = GradedSubspace.from_spanning(
        2, 1, [x(2, 1) + x(2, 2).scale(RF_Q), x(2, 2)]
    )
    basis = content_free_basis(v)
    assert len(basis) == 2
    # orthogonal over Z[q] and independent at several rationals
    assert scalar_product(basis[0], basis[1], lambda m: 1) == 0
    rng = random.Random(81)
    for _ in range(5):
        q0 = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        rows = [
            [c for c in (specialize_poly(p, q0).coefficient(m) for m in [(1, 0), (0, 1)])]
            for p in basis
        ]
        assert Matrix(2, 2, rows).rank() == 2


def test_content_free_basis_on_harmonics():
    for n, d in [(2, 1), (3, 1), (3, 2)]:
        space = harm_component(n, d, FORMAL)
        basis = content_free_basis(space)
        columns = monomials_of_degree(n, d)
        probes = [Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 4)]
        report = bad_q_candidates(n, d) if d >= 1 else None
        probes += list(report.rational_roots)
        for q0 in probes:
            rows = [
                [specialize_poly(p, q0).coefficient(m) for m in columns]
                for p in basis
            ]
            assert Matrix(len(basis), len(columns), rows).rank() == len(basis)


def test_specialized_dimension_examples():
    assert specialized_dimension(2, 1, Fraction(7)) == (1, 1)
    assert specialized_dimension(2, 4, Fraction(-1, 2)) == (0, 1)
    for q0 in (Fraction(2), Fraction(-5, 3)):
        assert specialized_dimension(1, 3, q0) == (0, 0)


def test_rational_roots():
    roots, cofactor = rational_roots(qp(-2, -5, 3))  # (3q + 1)(q - 2)
    assert roots == [Fraction(-1, 3), Fraction(2)]
    assert cofactor == (1,)
    roots, cofactor = rational_roots(qp(0, 0, 2, 2))  # 2 q^2 (q + 1)
    assert roots == [Fraction(-1), Fraction(0)]
    roots, cofactor = rational_roots(qp(1, 0, 1))
    assert roots == [] and cofactor == qp(1, 0, 1)


def test_factor_over_z():
    got = factor_over_z(qp_mul(qp(1, 0, 1), qp(2, 0, 1)))
    assert got == [qp(1, 0, 1), qp(2, 0, 1)]
    assert factor_over_z(qp(5)) == []


def _dense_to_sparse(rows):
    return [
        {j: v for j, v in enumerate(row) if v} for row in rows
    ]


def _brute_minor_gcd(rows: list[list[IntPoly]], rank: int) -> IntPoly:
    from qsteenrod.scalars import QP_ONE

    nrows, ncols = len(rows), len(rows[0])
    acc: IntPoly = ()
    for rsel in combinations(range(nrows), rank):
        for csel in combinations(range(ncols), rank):
            det = _poly_det([[rows[i][j] for j in csel] for i in rsel])
            acc = qp_gcd(acc, det)
            if acc == QP_ONE:
                return acc
    return qp_primitive(acc)


def _poly_det(m):
    from qsteenrod.scalars import qp_sub

    if len(m) == 1:
        return m[0][0]
    out: IntPoly = ()
    for j, top in enumerate(m[0]):
        if not top:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = qp_mul(top, _poly_det(minor))
        out = qp_sub(out, term) if j % 2 else (
            tuple(a + b for a, b in _pad(out, term))
        )
    return _trimmed(out)


def _pad(a, b):
    length = max(len(a), len(b))
    return zip(a + (0,) * (length - len(a)), b + (0,) * (length - len(b)))


def _trimmed(t):
    t = tuple(t)
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def test_minor_gcd_against_brute_force():
    rng = random.Random(55)
    for _ in range(12):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(1, 3)
        dense = [
            [
                _trimmed((rng.randint(-3, 3), rng.randint(-2, 2)))
                for _ in range(ncols)
            ]
            for _ in range(nrows)
        ]
        sparse = _dense_to_sparse(dense)
        rank, gcd = minor_gcd(sparse, ncols)
        assert rank == sparse_rank(sparse, ncols)
        if rank:
            brute = _brute_minor_gcd(dense, rank)
            assert gcd == brute, (dense, gcd, brute)


def test_minor_gcd_on_harmonic_constraints_small():
    rows, ncols = harmonic_constraint_rows(2, 4, (1, 2))
    rank, gcd = minor_gcd(rows, ncols)
    dense = [[row.get(j, ()) for j in range(ncols)] for row in rows]
    assert gcd == _brute_minor_gcd(dense, rank)


def test_rank_never_increases_under_specialization():
    rng = random.Random(97)
    for _ in range(8):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 4)
        rows = []
        for _ in range(nrows):
            row = {}
            for j in range(ncols):
                coeffs = tuple(rng.randint(-3, 3) for _ in range(3))
                row[j] = _trimmed(coeffs)
            rows.append({j: v for j, v in row.items() if v})
        generic = sparse_rank(rows, ncols)
        rank_calc, gcd = minor_gcd(rows, ncols)
        roots, _ = rational_roots(gcd) if gcd != (1,) and gcd else ([], ())
        for _ in range(10):
            q0 = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            special = sparse_rank(evaluate_rows(rows, q0), ncols)
            assert special <= generic
            if special < generic:
                assert qp_eval(gcd, q0) == 0
            if generic and q0 not in roots and gcd:
                assert special == generic or qp_eval(gcd, q0) == 0


def test_bad_q_two_variables():
    for d in range(2, 9):
        report = bad_q_candidates(2, d)
        assert Fraction(-2, d) in report.rational_roots
        for root, dim_at_root in report.jumps:
            assert dim_at_root > report.generic_harm_dim
    report = bad_q_candidates(2, 3)
    assert report.rational_roots == (Fraction(-2, 3),)
    report = bad_q_candidates(1, 2)
    assert report.rational_roots == ()


def test_bad_q_roots_match_direct_dimension_jumps():
    for d in (2, 3, 4):
        report = bad_q_candidates(2, d)
        for root, dim_at_root in report.jumps:
            direct = harm_component(2, d, QParam(root)).dim
            assert direct == dim_at_root


def test_conjectured_root_form():
    assert conjectured_root_form(Fraction(-1, 2), 2) == {
        "a_in_1_to_n": True,
        "a_in_1_to_n_and_a_le_b": True,
    }
    assert conjectured_root_form(Fraction(-3, 2), 2)["a_in_1_to_n"] is False
    assert conjectured_root_form(Fraction(0), 3)["a_in_1_to_n"] is False
    assert conjectured_root_form(Fraction(-3, 2), 3) == {
        "a_in_1_to_n": True,
        "a_in_1_to_n_and_a_le_b": False,
    }


def test_extended_generator_flag():
    lean = bad_q_candidates(3, 3)
    full = bad_q_candidates(3, 3, extended_generators=True)
    # with all generators the q = 0 artifact disappears
    assert Fraction(0) in lean.rational_roots
    assert Fraction(0) not in full.rational_roots
    for root in full.rational_roots:
        assert root in lean.rational_roots

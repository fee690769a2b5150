"""String machinery: building, harmonicity, reconstruction, classification."""

import random
from fractions import Fraction

import pytest

from qsteenrod.errors import InhomogeneousError
from qsteenrod.linalg import Matrix
from qsteenrod.polynomials import Polynomial, monomials_of_degree
from qsteenrod.scalars import QParam, rf_normalize
from qsteenrod.spaces import harm_component
from qsteenrod.strings import (
    build_string,
    coefficient_slice,
    divided_power,
    is_harmonic_string,
    polynomial_to_string,
    string_relation_holds,
    string_to_polynomial,
    two_variable_extra_line,
    two_variable_harmonics,
    y_degree,
)

FORMAL = QParam.formal()


def x(n, i):
    return Polynomial.variable(n, i)


def test_build_string_trivial():
    F = build_string(Polynomial.one(1), FORMAL)
    assert F.entries == (Polynomial.one(1),)
    assert F.length == 1 and F.head == Polynomial.one(1)


def test_build_string_divided_square():
    # oracle: D_k x^[d] = (1 + q(d-k)) x^[d-k]
    F = build_string(divided_power(1, 1, 2), FORMAL)
    q = FORMAL.scalar()
    assert F.entries == (
        divided_power(1, 1, 2),
        x(1, 1).scale(-(1 + q)),
        Polynomial.one(1).scale(-1),
    )


def test_build_string_antisymmetric_seed():
    F = build_string(x(2, 1) - x(2, 2), FORMAL)
    assert F.entries[0] == x(2, 1) - x(2, 2)
    assert F.entries[1].is_zero()
    assert F.length == 1


def test_build_string_rejects_inhomogeneous():
    with pytest.raises(InhomogeneousError):
        build_string(x(2, 1) + Polynomial.one(2), FORMAL)


def test_divided_power_string_classification():
    # harmonic exactly when d < 2 or q = -2/d
    for d in range(2):
        assert is_harmonic_string(build_string(divided_power(1, 1, d), FORMAL))
    for d in range(2, 7):
        assert not is_harmonic_string(build_string(divided_power(1, 1, d), FORMAL))
        good = QParam.rational(-2, d)
        F = build_string(divided_power(1, 1, d), good)
        assert is_harmonic_string(F)
        for k in (2, 3):
            assert string_relation_holds(F, k)
        for other in (QParam.rational(1), QParam.rational(-3, 7)):
            assert not is_harmonic_string(
                build_string(divided_power(1, 1, d), other)
            )


def test_string_to_polynomial_reconstruction():
    q = QParam.rational(-1)
    F = build_string(divided_power(1, 1, 2), q)
    p = string_to_polynomial(F)
    half = Fraction(1, 2)
    expected = (x(2, 1) - x(2, 2)) * (x(2, 1) + x(2, 2))
    assert p == expected.scale(half)
    assert harm_component(2, 2, q).contains(p)


def test_string_to_polynomial_trivial_cases():
    assert string_to_polynomial(build_string(Polynomial.one(1), FORMAL)) == (
        Polynomial.one(2)
    )
    F = build_string(x(2, 1) - x(2, 2), FORMAL)
    p = string_to_polynomial(F)
    assert p == x(3, 1) - x(3, 2)
    assert harm_component(3, 1, FORMAL).contains(p)


def test_polynomial_to_string_round_trip():
    q = QParam.rational(-1)
    F = build_string(divided_power(1, 1, 2), q)
    back = polynomial_to_string(string_to_polynomial(F), q)
    assert back.entries == F.entries


def _random_homogeneous(rng, n, d):
    terms = {}
    for mono in monomials_of_degree(n, d):
        c = rng.randint(-3, 3)
        if c:
            terms[mono] = rf_normalize((c,), (1,))
    return Polynomial(n, terms)


def test_reconstruction_equivalence_random_seeds():
    rng = random.Random(2718)
    for q in (FORMAL, QParam.rational(-1, 2), QParam.rational(2)):
        for n in (1, 2):
            for d in range(5):
                for _ in range(4):
                    g = _random_homogeneous(rng, n, d)
                    if not g:
                        continue
                    F = build_string(g, q)
                    lifted = string_to_polynomial(F)
                    harmonic = is_harmonic_string(F)
                    member = harm_component(
                        n + 1, lifted.homogeneous_degree(), q
                    ).contains(lifted)
                    assert harmonic == member, (n, d, str(q))


def test_k_one_suffices():
    rng = random.Random(1234)
    for n in (1, 2):
        for d in range(4):
            for _ in range(4):
                g = _random_homogeneous(rng, n, d)
                if not g:
                    continue
                F = build_string(g, FORMAL)
                if is_harmonic_string(F):
                    for k in (2, 3):
                        assert string_relation_holds(F, k)


def test_head_harmonicity_and_nonvanishing():
    for d in range(2, 7):
        q = QParam.rational(-2, d)
        F = build_string(divided_power(1, 1, d), q)
        assert is_harmonic_string(F)
        head = F.head
        head_degree = head.homogeneous_degree()
        assert harm_component(1, head_degree, q).contains(head)
        for i in range(F.length):
            if q.value != Fraction(-1, i) if i else True:
                assert F.entries[i], (d, i)


def test_coefficient_slice_examples():
    f = (x(3, 1) - x(3, 2)) * x(3, 3)  # (x1 - x2) y with y the third variable
    assert y_degree(f) == 1
    assert coefficient_slice(f, 1) == x(2, 1) - x(2, 2)

    cubic = (x(2, 1) - x(2, 2)) * (x(2, 1) + x(2, 2)) ** 2
    top = coefficient_slice(cubic, 3)
    assert top == Polynomial.one(1).scale(-1)
    assert harm_component(1, 0, FORMAL).contains(top.scale(-1))

    flat = x(2, 1) ** 2
    assert coefficient_slice(flat, 2).is_zero()
    with pytest.raises(ValueError):
        coefficient_slice(cubic, 2)


def test_two_variable_classification_formal():
    spaces = two_variable_harmonics(FORMAL, 8)
    assert [spaces[d].dim for d in range(9)] == [1, 1, 0, 0, 0, 0, 0, 0, 0]


def test_two_variable_classification_special_value():
    spaces = two_variable_harmonics(QParam.rational(-2, 5), 6)
    assert [spaces[d].dim for d in range(7)] == [1, 1, 0, 0, 0, 1, 0]
    assert spaces[5].contains(two_variable_extra_line(5))


def test_two_variable_classification_zero():
    spaces = two_variable_harmonics(QParam.rational(0), 4)
    assert [spaces[d].dim for d in range(5)] == [1, 1, 0, 0, 0]


def test_injection_dimension_bound():
    """y-slice quotients of Harm(X_{n+1}) are dominated by shifted Harm(X_n)."""
    for n in (1, 2):
        for total_degree in range(6):
            big = harm_component(n + 1, total_degree, FORMAL)
            columns = monomials_of_degree(n + 1, total_degree)
            for d in range(total_degree + 1):

                def filtered_dim(bound):
                    if big.dim == 0:
                        return 0
                    high = [m for m in columns if m[-1] > bound]
                    rows = [
                        [p.coefficient(m) for p in big.basis] for m in high
                    ]
                    if not rows:
                        return big.dim
                    return len(Matrix(len(rows), big.dim, rows).kernel())

                quotient = filtered_dim(d) - filtered_dim(d - 1)
                small = harm_component(n, total_degree - d, FORMAL).dim
                assert quotient <= small

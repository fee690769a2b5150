"""Specialization at rational q and detection of rank-drop values.

Rank can only drop under specialization, and it drops exactly at the roots
of the gcd of the maximal minors of an integer-polynomial matrix.  That gcd
(the top determinantal divisor) is computed by unimodular diagonalization
over Q[q] rather than minor enumeration; scaling rows or columns by nonzero
integers along the way only changes it by a unit, so the primitive part is
exact.  Rational roots come from the rational root theorem on the primitive
gcd; remaining factors are split into irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import PoleError
from .linalg import SparseIntRow, rf_rows_to_int, sparse_rank
from .polynomials import Polynomial, monomials_of_degree, scalar_product
from .scalars import (
    IntPoly,
    QParam,
    QP_ONE,
    RationalFunction,
    qp_content,
    qp_degree,
    qp_div_exact,
    qp_eval,
    qp_mul,
    qp_neg,
    qp_primitive,
    qp_scale,
    qp_str,
    qp_sub,
    qp_trim,
)
from .spaces import GradedSubspace, harm_component
from .steenrod import dual_pk
from .weyl import weyl_apply


def specialize_scalar(c: RationalFunction, q0: Fraction) -> Fraction:
    return c.evaluate(q0)


def specialize_poly(p: Polynomial, q0: Fraction) -> Polynomial:
    """Evaluate every coefficient at q = q0; poles name the offending monomial."""
    terms = {}
    for mono, coeff in p.terms.items():
        try:
            value = coeff.evaluate(q0)
        except PoleError as exc:
            raise PoleError(
                f"coefficient {coeff} of monomial {mono} has a pole at q = {q0}"
            ) from exc
        if value:
            terms[mono] = RationalFunction.from_fraction(value)
    return Polynomial(p.n, terms)


def _poly_content_free(p: Polynomial) -> Polynomial:
    """Clear denominators and divide by the full Z[q]-content of the vector."""
    from .scalars import qp_gcd, qp_lcm

    lcm = QP_ONE
    for coeff in p.terms.values():
        lcm = qp_lcm(lcm, coeff.den)
    cleared = {
        mono: qp_mul(coeff.num, qp_div_exact(lcm, coeff.den))
        for mono, coeff in p.terms.items()
    }
    g: IntPoly = ()
    for value in cleared.values():
        g = qp_gcd(g, value)
        if g == QP_ONE:
            break
    lead = max(cleared)
    if g != QP_ONE:
        cleared = {m: qp_div_exact(v, g) for m, v in cleared.items()}
    if cleared[lead][-1] < 0:
        cleared = {m: qp_neg(v) for m, v in cleared.items()}
    return Polynomial(
        p.n, {m: RationalFunction.make(v) for m, v in cleared.items()}
    )


def content_free_basis(v: GradedSubspace) -> list[Polynomial]:
    """A basis over Z[q] that stays a basis under every rational specialization.

    Gram-Schmidt orthogonalization (coordinatewise product, no q in the
    weights) followed by clearing denominators and stripping the content of
    each vector: pairwise orthogonality survives evaluation at real q0 and a
    content-free vector cannot vanish, so the specialized family is always
    linearly independent.
    """
    if v.dim == 0:
        raise ValueError("content-free basis of the zero space")
    ones = lambda mono: 1
    orthogonal: list[Polynomial] = []
    for b in v.basis:
        w = b
        for prev in orthogonal:
            w = w - prev.scale(
                scalar_product(b, prev, ones) / scalar_product(prev, prev, ones)
            )
        orthogonal.append(w)
    return [_poly_content_free(w) for w in orthogonal]


def specialized_dimension(n: int, d: int, q0: Fraction) -> tuple[int, int]:
    """(dimension of the specialized generic basis, direct dimension at q0).

    The first component always equals the generic dimension; the second can
    exceed it exactly at the bad values of q.
    """
    generic = harm_component(n, d, QParam.formal())
    if generic.dim == 0:
        first = 0
    else:
        basis = content_free_basis(generic)
        specialized = [specialize_poly(p, q0) for p in basis]
        columns = monomials_of_degree(n, d)
        index = {m: j for j, m in enumerate(columns)}
        rf_rows = [
            {index[m]: c for m, c in p.terms.items()} for p in specialized
        ]
        first = sparse_rank(rf_rows_to_int(rf_rows), len(columns))
    direct = harm_component(n, d, QParam(q0)).dim
    return first, direct


# ---------------------------------------------------------------------------
# Rank-drop locus of an integer-polynomial matrix


def _swap_to_front(matrix: list[list[IntPoly]], r: int, c: int) -> None:
    matrix[0], matrix[r] = matrix[r], matrix[0]
    for row in matrix:
        row[0], row[c] = row[c], row[0]


def _min_degree_entry(matrix: list[list[IntPoly]]) -> tuple[int, int] | None:
    best = None
    best_deg = None
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            if value:
                d = qp_degree(value)
                if best_deg is None or d < best_deg:
                    best, best_deg = (i, j), d
                    if d == 0:
                        return best
    return best


def minor_gcd(rows: Sequence[SparseIntRow], ncols: int) -> tuple[int, IntPoly]:
    """Generic rank r and the primitive gcd of all r x r minors.

    Diagonalizes by row/column operations that are unimodular over Q[q]
    (swaps, integer scalings, adding polynomial multiples); the product of
    the resulting diagonal entries is the top determinantal divisor up to a
    rational unit, reported as a primitive integer polynomial with positive
    leading coefficient.
    """
    matrix = [
        [row.get(j, ()) for j in range(ncols)] for row in rows if row
    ]
    product: IntPoly = QP_ONE
    rank = 0
    while matrix and matrix[0]:
        spot = _min_degree_entry(matrix)
        if spot is None:
            break
        _swap_to_front(matrix, *spot)
        while True:
            pivot = matrix[0][0]
            dirty = False
            for i in range(1, len(matrix)):
                entry = matrix[i][0]
                if not entry:
                    continue
                # pseudo-division of the row by the pivot row
                quot, scale = _pseudo_quotient(entry, pivot)
                matrix[i] = [
                    qp_sub(qp_scale(v, scale), qp_mul(quot, matrix[0][j]))
                    for j, v in enumerate(matrix[i])
                ]
                matrix[i] = _strip_int_content(matrix[i])
                if matrix[i][0]:
                    dirty = True
            for j in range(1, ncols_of(matrix)):
                entry = matrix[0][j]
                if not entry:
                    continue
                quot, scale = _pseudo_quotient(entry, pivot)
                for row in matrix:
                    row[j] = qp_sub(qp_scale(row[j], scale), qp_mul(quot, row[0]))
                _strip_column_content(matrix, j)
                if matrix[0][j]:
                    dirty = True
            if not dirty:
                break
            nxt = _min_degree_entry(matrix)
            _swap_to_front(matrix, *nxt)
        product = qp_primitive(qp_mul(product, matrix[0][0]))
        rank += 1
        matrix = [row[1:] for row in matrix[1:]]
        matrix = [row for row in matrix if any(row)]
    if product[-1] < 0:
        product = qp_neg(product)
    return rank, product


def ncols_of(matrix: list[list[IntPoly]]) -> int:
    return len(matrix[0]) if matrix else 0


def _pseudo_quotient(entry: IntPoly, pivot: IntPoly) -> tuple[IntPoly, int]:
    """quot, scale with scale * entry - quot * pivot of degree < deg(pivot)."""
    de, dp = qp_degree(entry), qp_degree(pivot)
    lp = pivot[-1]
    rem = list(entry) + [0] * max(0, dp - de)
    quot = [0] * max(de - dp + 1, 1)
    scale = 1
    for i in range(de, dp - 1, -1):
        c = rem[i]
        rem = [v * lp for v in rem]
        quot = [v * lp for v in quot]
        scale *= lp
        if c:
            quot[i - dp] += c
            for j in range(dp + 1):
                rem[i - dp + j] -= c * pivot[j]
    return qp_trim(tuple(quot)), scale


def _strip_int_content(row: list[IntPoly]) -> list[IntPoly]:
    import math

    g = 0
    for v in row:
        g = math.gcd(g, qp_content(v))
        if g == 1:
            return row
    if g <= 1:
        return row
    return [tuple(c // g for c in v) for v in row]


def _strip_column_content(matrix: list[list[IntPoly]], j: int) -> None:
    import math

    g = 0
    for row in matrix:
        g = math.gcd(g, qp_content(row[j]))
        if g == 1:
            return
    if g <= 1:
        return
    for row in matrix:
        row[j] = tuple(c // g for c in row[j])


def rational_roots(p: IntPoly) -> tuple[list[Fraction], IntPoly]:
    """All rational roots of p (as a set) and the rootless cofactor.

    Linear factors are divided out with multiplicity; the cofactor is
    primitive with positive leading coefficient and no rational roots.
    """
    if not p:
        raise ValueError("the zero polynomial vanishes everywhere")
    work = qp_primitive(p)
    if work[-1] < 0:
        work = qp_neg(work)
    roots: set[Fraction] = set()
    # factor out powers of q
    while len(work) > 1 and work[0] == 0:
        roots.add(Fraction(0))
        work = work[1:]
    changed = True
    while changed and len(work) > 1:
        changed = False
        lead, const = work[-1], work[0]
        for a in _divisors(abs(const)):
            for b in _divisors(abs(lead)):
                for root in (Fraction(a, b), Fraction(-a, b)):
                    if qp_eval(work, root) == 0:
                        roots.add(root)
                        factor = (-root.numerator, root.denominator)
                        work = qp_primitive(qp_div_exact_q(work, factor))
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    if work[-1] < 0:
        work = qp_neg(work)
    return sorted(roots), qp_primitive(work)


def qp_div_exact_q(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact division valid over Q[q] (input must be divisible over Q)."""
    da, db = qp_degree(a), qp_degree(b)
    rem = [Fraction(c) for c in a]
    quot = [Fraction(0)] * (da - db + 1)
    lb = b[-1]
    for i in range(da, db - 1, -1):
        c = rem[i]
        if c:
            f = c / lb
            quot[i - db] = f
            for j in range(db + 1):
                rem[i - db + j] -= f * b[j]
    if any(rem[:db]):
        raise ArithmeticError("inexact division over Q[q]")
    denom = 1
    for f in quot:
        denom = denom * f.denominator // _gcd_int(denom, f.denominator)
    scaled = [int(f * denom) for f in quot]
    out = qp_primitive(qp_trim(tuple(scaled)))
    return out


def _gcd_int(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def _divisors(value: int) -> list[int]:
    """Positive divisors, via prime factorization so big inputs stay cheap."""
    if value == 0:
        return [1]
    primes = sympy.factorint(abs(value))
    out = [1]
    for p, e in primes.items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def factor_over_z(p: IntPoly) -> list[IntPoly]:
    """Irreducible integer-polynomial factors of p (content dropped)."""
    if len(p) <= 1:
        return []
    x = sympy.Symbol("q")
    expr = sum(c * x**i for i, c in enumerate(p))
    _, factors = sympy.factor_list(sympy.Poly(expr, x))
    out = []
    for base, multiplicity in factors:
        coeffs = [int(c) for c in sympy.Poly(base, x).all_coeffs()][::-1]
        factor = qp_primitive(qp_trim(tuple(coeffs)))
        if len(factor) > 1:
            out.extend([factor] * multiplicity)
    return sorted(out)


@dataclass(frozen=True)
class BadQReport:
    """Rank-drop analysis of the harmonic constraints in one degree."""

    n: int
    degree: int
    generic_rank: int
    generic_harm_dim: int
    minor_gcd: IntPoly
    rational_roots: tuple[Fraction, ...]
    nonrational_factors: tuple[IntPoly, ...]
    jumps: tuple[tuple[Fraction, int], ...]  # (root, harmonic dim at root)

    def pretty_gcd(self) -> str:
        return qp_str(self.minor_gcd)


def harmonic_constraint_rows(
    n: int, d: int, generator_degrees: Sequence[int]
) -> tuple[list[SparseIntRow], int]:
    """Stacked integer matrix of the down operators on the degree-d slice."""
    columns = monomials_of_degree(n, d)
    index = {m: j for j, m in enumerate(columns)}
    rows: list[SparseIntRow] = []
    formal = QParam.formal()
    for k in generator_degrees:
        if k > d:
            continue
        down = dual_pk(n, k, formal)
        targets = monomials_of_degree(n, d - k)
        tindex = {m: j for j, m in enumerate(targets)}
        blocks: list[SparseIntRow] = [dict() for _ in targets]
        for j, mono in enumerate(columns):
            image = weyl_apply(down, Polynomial.monomial(n, mono))
            for tmono, coeff in image.terms.items():
                assert coeff.den == QP_ONE
                blocks[tindex[tmono]][j] = coeff.num
        rows.extend(b for b in blocks if b)
    return rows, len(columns)


def evaluate_rows(
    rows: Sequence[SparseIntRow], q0: Fraction
) -> list[SparseIntRow]:
    """Evaluate a polynomial matrix at q0 and clear to integer rows."""
    out = []
    for row in rows:
        values = {j: qp_eval(v, q0) for j, v in row.items()}
        denom = 1
        for f in values.values():
            denom = denom * f.denominator // _gcd_int(denom, f.denominator)
        cleaned = {
            j: ((int(f * denom),) if f else ())
            for j, f in values.items()
            if f
        }
        if cleaned:
            out.append(cleaned)
    return out


def bad_q_candidates(
    n: int, d: int, extended_generators: bool = False
) -> BadQReport:
    """Rational q where the degree-d harmonic space grows beyond generic.

    Builds the integer matrix of the stacked down-operator constraints
    (degrees 1 and 2; all degrees up to d with the paranoia flag), takes the
    gcd of its maximal minors, and extracts the rational roots.  Every
    reported root is verified to drop the rank; the accompanying jumps list
    records the harmonic dimension at each root.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    degrees = tuple(range(1, d + 1)) if extended_generators else (1, 2)
    rows, ncols = harmonic_constraint_rows(n, d, degrees)
    rank = sparse_rank(rows, ncols)
    smith_rank, gcd = minor_gcd(rows, ncols)
    if smith_rank != rank:
        raise AssertionError(
            f"rank mismatch: elimination {rank}, diagonalization {smith_rank}"
        )
    roots, cofactor = rational_roots(gcd)
    jumps = []
    for root in roots:
        specialized = evaluate_rows(rows, root)
        dropped = sparse_rank(specialized, ncols)
        if dropped >= rank:
            raise AssertionError(
                f"root {root} of the minor gcd did not drop the rank"
            )
        jumps.append((root, ncols - dropped))
    return BadQReport(
        n=n,
        degree=d,
        generic_rank=rank,
        generic_harm_dim=ncols - rank,
        minor_gcd=gcd,
        rational_roots=tuple(roots),
        nonrational_factors=tuple(factor_over_z(cofactor)),
        jumps=tuple(jumps),
    )


def conjectured_root_form(root: Fraction, n: int) -> dict[str, bool]:
    """Both published predicates for the shape of bad values."""
    a, b = -root.numerator, root.denominator
    basic = root < 0 and 1 <= a <= n
    return {"a_in_1_to_n": basic, "a_in_1_to_n_and_a_le_b": basic and a <= b}

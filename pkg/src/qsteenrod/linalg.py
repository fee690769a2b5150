"""Exact linear algebra over Q(q).

Elimination is fraction-free: rows are cleared to integer polynomials in q,
combined by cross-multiplication, and stripped of their common polynomial
factor after every update, so intermediate entries never hold fractions.
Pivoting is deterministic (leftmost nonzero column, first row wins), which
makes reduced echelon forms canonical and reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InhomogeneousError, InvalidWeightError, VariableCountMismatchError
from .polynomials import Monomial, Polynomial, monomials_of_degree
from .scalars import (
    IntPoly,
    QP_ONE,
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    qp_div_exact,
    qp_gcd,
    qp_lcm,
    qp_mul,
    qp_neg,
    qp_sub,
)

SparseIntRow = dict[int, IntPoly]
SparseRFRow = dict[int, RationalFunction]


def clear_denominators(row: SparseRFRow) -> SparseIntRow:
    """Scale a row of rational functions to integer polynomials."""
    lcm = QP_ONE
    for value in row.values():
        lcm = qp_lcm(lcm, value.den)
    out: SparseIntRow = {}
    for col, value in row.items():
        if value:
            out[col] = qp_mul(value.num, qp_div_exact(lcm, value.den))
    return strip_row_gcd(out)


def strip_row_gcd(row: SparseIntRow) -> SparseIntRow:
    """Divide a row by the gcd of its entries (sign fixed by first column)."""
    if not row:
        return row
    g: IntPoly = ()
    for value in row.values():
        g = qp_gcd(g, value)
        if g == QP_ONE:
            break
    first = row[min(row)]
    negate = first[-1] < 0
    if g == QP_ONE:
        if not negate:
            return row
        return {c: qp_neg(v) for c, v in row.items()}
    return {
        c: (qp_neg(qp_div_exact(v, g)) if negate else qp_div_exact(v, g))
        for c, v in row.items()
    }


def forward_eliminate(
    rows: list[SparseIntRow], ncols: int
) -> tuple[list[int], list[SparseIntRow]]:
    """Row echelon form over Z[q]; returns pivot columns and nonzero rows."""
    work = [dict(r) for r in rows if r]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_at = None
        for i in range(rank, len(work)):
            if col in work[i]:
                pivot_at = i
                break
        if pivot_at is None:
            continue
        work[rank], work[pivot_at] = work[pivot_at], work[rank]
        prow = work[rank]
        pval = prow[col]
        for i in range(rank + 1, len(work)):
            row = work[i]
            coef = row.pop(col, None)
            if coef is None:
                continue
            new: SparseIntRow = {}
            for j, v in row.items():
                new[j] = qp_mul(pval, v)
            for j, v in prow.items():
                if j == col:
                    continue
                acc = qp_sub(new.get(j, ()), qp_mul(coef, v))
                if acc:
                    new[j] = acc
                else:
                    new.pop(j, None)
            work[i] = strip_row_gcd(new)
        pivots.append(col)
        rank += 1
    return pivots, [r for r in work[:rank]]


def reduced_echelon(
    rows: list[SparseIntRow], ncols: int
) -> tuple[list[int], list[SparseRFRow]]:
    """Reduced row echelon form over Q(q) with unit pivots."""
    pivots, ech = forward_eliminate(rows, ncols)
    for k in range(len(pivots) - 1, -1, -1):
        col = pivots[k]
        prow = ech[k]
        pval = prow[col]
        for i in range(k):
            row = ech[i]
            coef = row.pop(col, None)
            if coef is None:
                continue
            new: SparseIntRow = {j: qp_mul(pval, v) for j, v in row.items()}
            for j, v in prow.items():
                if j == col:
                    continue
                acc = qp_sub(new.get(j, ()), qp_mul(coef, v))
                if acc:
                    new[j] = acc
                else:
                    new.pop(j, None)
            ech[i] = strip_row_gcd(new)
    reduced: list[SparseRFRow] = []
    for k, row in enumerate(ech):
        pval = row[pivots[k]]
        reduced.append(
            {j: RationalFunction.make(v, pval) for j, v in row.items()}
        )
    return pivots, reduced


def sparse_rank(rows: list[SparseIntRow], ncols: int) -> int:
    return len(forward_eliminate(rows, ncols)[0])


def kernel_basis(
    pivots: list[int], reduced: list[SparseRFRow], ncols: int
) -> list[SparseRFRow]:
    """Kernel vectors from a reduced echelon form, one per free column."""
    pivot_set = set(pivots)
    out: list[SparseRFRow] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec: SparseRFRow = {free: RF_ONE}
        for k, row in enumerate(reduced):
            coef = row.get(free)
            if coef:
                vec[pivots[k]] = -coef
        out.append(vec)
    return out


def rf_rows_to_int(rows: Iterable[SparseRFRow]) -> list[SparseIntRow]:
    return [clear_denominators(r) for r in rows]


class Matrix:
    """A dense exact matrix over Q(q); a thin wrapper over the sparse core."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence]):
        self.rows = rows
        self.cols = cols
        self.entries = tuple(
            tuple(_as_rf(v) for v in row) for row in entries
        )
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    def _sparse(self) -> list[SparseIntRow]:
        return rf_rows_to_int(
            {j: v for j, v in enumerate(row) if v} for row in self.entries
        )

    def rank(self) -> int:
        return sparse_rank(self._sparse(), self.cols)

    def rref(self) -> "Matrix":
        pivots, reduced = reduced_echelon(self._sparse(), self.cols)
        dense = [
            [row.get(j, RF_ZERO) for j in range(self.cols)] for row in reduced
        ]
        return Matrix(len(dense), self.cols, dense)

    def kernel(self) -> list[tuple[RationalFunction, ...]]:
        pivots, reduced = reduced_echelon(self._sparse(), self.cols)
        vecs = kernel_basis(pivots, reduced, self.cols)
        return [
            tuple(vec.get(j, RF_ZERO) for j in range(self.cols)) for vec in vecs
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(v) for v in row) for row in self.entries
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _as_rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, int):
        return RationalFunction.from_int(value)
    if isinstance(value, Fraction):
        return RationalFunction.from_fraction(value)
    raise TypeError(f"cannot use {value!r} as a matrix entry")


def kernel(m: Matrix) -> list[tuple[RationalFunction, ...]]:
    """Basis of the right null space of m over Q(q)."""
    return m.kernel()


def _homogeneous_frame(
    polys: Sequence[Polynomial],
) -> tuple[int, int, list[Monomial], dict[Monomial, int]]:
    live = [p for p in polys if p]
    if not live:
        raise ValueError("cannot infer degree frame from zero input")
    n = live[0].n
    degree = live[0].homogeneous_degree()
    for p in live:
        if p.n != n:
            raise VariableCountMismatchError("mixed variable counts")
        if p.homogeneous_degree() != degree:
            raise InhomogeneousError("mixed degrees in one graded slice")
    columns = monomials_of_degree(n, degree)
    index = {m: j for j, m in enumerate(columns)}
    return n, degree, columns, index


def poly_to_row(p: Polynomial, index: dict[Monomial, int]) -> SparseRFRow:
    return {index[m]: c for m, c in p.terms.items()}


def row_to_poly(row: SparseRFRow, n: int, columns: list[Monomial]) -> Polynomial:
    return Polynomial(n, {columns[j]: c for j, c in row.items()})


def echelonize(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced echelon basis of the span of homogeneous polynomials.

    Columns follow descending lex order, so leading monomials of the output
    strictly decrease and the result is canonical for the span.
    """
    live = [p for p in polys if p]
    if not live:
        return []
    n, _, columns, index = _homogeneous_frame(live)
    rows = rf_rows_to_int(poly_to_row(p, index) for p in live)
    _, reduced = reduced_echelon(rows, len(columns))
    return [row_to_poly(row, n, columns) for row in reduced]


def weighted_complement(
    basis: Sequence[Polynomial],
    n: int,
    degree: int,
    weights: Callable[[Monomial], int | Fraction],
) -> list[Polynomial]:
    """Orthogonal complement inside the full degree slice.

    The bilinear form is diagonal on monomials, <x^K, x^K> = weights(K); the
    complement of a d-dimensional subspace has codimension d.
    """
    columns = monomials_of_degree(n, degree)
    index = {m: j for j, m in enumerate(columns)}
    weight_rf: dict[Monomial, RationalFunction] = {}
    for mono in columns:
        w = weights(mono)
        if w <= 0:
            raise InvalidWeightError(f"weight of {mono} is {w}, must be positive")
        weight_rf[mono] = _as_rf(w)
    rows: list[SparseRFRow] = []
    for p in basis:
        if not p:
            continue
        if p.n != n or p.homogeneous_degree() != degree:
            raise InhomogeneousError("complement input outside the degree slice")
        rows.append({index[m]: c * weight_rf[m] for m, c in p.terms.items()})
    if not rows:
        return [Polynomial(n, {m: RF_ONE}) for m in columns]
    int_rows = rf_rows_to_int(rows)
    pivots, reduced = reduced_echelon(int_rows, len(columns))
    vecs = kernel_basis(pivots, reduced, len(columns))
    return echelonize([row_to_poly(v, n, columns) for v in vecs])

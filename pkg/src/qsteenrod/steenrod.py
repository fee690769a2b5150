"""Deformed power-sum operators and their straightening to the partition basis.

The degree-k generator on n variables is

    P_k = sum_i x_i^k (1 + q x_i d_i),

multiplication by the power sum p_k at q = 0.  Products P_mu over
compositions mu straighten to the partition-indexed basis P_lambda through
the commutator rule [P_k, P_l] = q (l - k) P_{k+l}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NonSymmetricError
from .polynomials import Monomial, Polynomial, monomials_of_degree
from .scalars import QParam, RF_ONE, RF_ZERO, RationalFunction
from .weyl import WeylElement, orbit_sum, weyl_apply, weyl_compose
from .linalg import (
    kernel_basis,
    reduced_echelon,
    rf_rows_to_int,
    SparseRFRow,
)

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(
        a > 0 for a in parts
    )


def partitions_of(
    d: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """Partitions of d in decreasing lex order, optionally bounded."""
    cap = d if max_part is None else min(max_part, d)
    length = d if max_length is None else max_length

    def rec(left: int, biggest: int, room: int, prefix: Partition) -> Iterator[Partition]:
        if left == 0:
            yield prefix
            return
        if room == 0:
            return
        for part in range(min(biggest, left), 0, -1):
            yield from rec(left - part, part, room - 1, prefix + (part,))

    if d == 0:
        yield ()
        return
    yield from rec(d, cap, length, ())


def partition_count(d: int) -> int:
    return sum(1 for _ in partitions_of(d))


def make_pk(n: int, k: int, q: QParam) -> WeylElement:
    """The degree-k deformed power-sum operator on x_1..x_n."""
    if k < 1:
        raise ValueError("only positive-degree generators exist")
    if n < 1:
        raise ValueError("need at least one variable")
    qs = q.scalar()
    terms: dict[tuple[Monomial, Monomial], RationalFunction] = {}
    zero = (0,) * n
    for i in range(n):
        xs = tuple(k if j == i else 0 for j in range(n))
        terms[(xs, zero)] = RF_ONE
        if qs:
            xs2 = tuple(k + 1 if j == i else 0 for j in range(n))
            ds = tuple(1 if j == i else 0 for j in range(n))
            terms[(xs2, ds)] = qs
    return WeylElement(n, terms)


def make_p_lambda(n: int, mu: Sequence[int], q: QParam) -> WeylElement:
    """The product P_mu = P_{mu_1} ... P_{mu_k}; the identity when mu is empty."""
    out = WeylElement.identity(n)
    for part in mu:
        out = weyl_compose(out, make_pk(n, part, q))
    return out


def dual_pk(n: int, k: int, q: QParam) -> WeylElement:
    """The down operator D_k, dual to P_k; lowers degree by k."""
    from .weyl import weyl_dual

    return weyl_dual(make_pk(n, k, q))


def straighten(mu: Sequence[int], q: QParam) -> dict[Partition, RationalFunction]:
    """Expand P_mu over the partition basis.

    Out-of-order adjacent pairs are swapped with the commutator correction
    q (l - k) P_{k+l}; every swap either sorts the word or strictly shortens
    it, so the rewriting terminates.
    """
    qs = q.scalar()
    result: dict[Partition, RationalFunction] = {}
    stack: list[tuple[Composition, RationalFunction]] = [(tuple(mu), RF_ONE)]
    while stack:
        word, coeff = stack.pop()
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a < b:
                swapped = word[:i] + (b, a) + word[i + 2 :]
                stack.append((swapped, coeff))
                correction = coeff * qs * (b - a)
                if correction:
                    merged = word[:i] + (a + b,) + word[i + 2 :]
                    stack.append((merged, correction))
                break
        else:
            acc = result.get(word, RF_ZERO) + coeff
            if acc:
                result[word] = acc
            else:
                result.pop(word, None)
    return result


def polynomial_part(f: WeylElement) -> Polynomial:
    """f applied to 1: the terms of f without derivatives, as a polynomial."""
    return weyl_apply(f, Polynomial.one(f.n))


def monomial_symmetric(n: int, lam: Sequence[int]) -> Polynomial:
    """The monomial symmetric polynomial m_lambda on n variables (0 if too long)."""
    lam = tuple(lam)
    if len(lam) > n:
        return Polynomial.zero(n)
    exps = lam + (0,) * (n - len(lam))
    return orbit_sum(Polynomial.monomial(n, exps), n)


def monomial_expansion(p: Polynomial) -> dict[Partition, RationalFunction]:
    """Coordinates of a symmetric polynomial over the m_lambda basis."""
    coords: dict[Partition, RationalFunction] = {}
    for mono, coeff in p.terms.items():
        if all(mono[i] >= mono[i + 1] for i in range(len(mono) - 1)):
            lam = tuple(e for e in mono if e)
            coords[lam] = coeff
    recombined = Polynomial.zero(p.n)
    for lam, coeff in coords.items():
        recombined = recombined + monomial_symmetric(p.n, lam).scale(coeff)
    if recombined != p:
        raise NonSymmetricError("polynomial is not symmetric in its variables")
    return coords


@dataclass(frozen=True)
class OperatorSpanRank:
    """Rank of a family of operators probed on a finite graded block."""

    n: int
    degree: int
    partitions: tuple[Partition, ...]
    rank: int
    relations: tuple[dict[Partition, RationalFunction], ...]


def operator_span_rank(
    n: int,
    d: int,
    q: QParam,
    probe_cap: int,
    probe: Polynomial | None = None,
) -> OperatorSpanRank:
    """Linear rank of {P_lambda : lambda |- d} acting on polynomials.

    By default the operators are probed on every monomial of degree at most
    probe_cap; passing an explicit probe polynomial restricts the test to its
    orbit of images (e.g. probe on x_1 only), which can only shrink the rank.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    if probe_cap < d and probe is None:
        raise ValueError("probe cap must be at least the operator degree")
    lams = tuple(partitions_of(d))
    operators = [make_p_lambda(n, lam, q) for lam in lams]
    if probe is not None:
        probes = [probe]
    else:
        probes = [
            Polynomial.monomial(n, mono)
            for e in range(probe_cap + 1)
            for mono in monomials_of_degree(n, e)
        ]
    rows: list[SparseRFRow] = []
    for op in operators:
        row: SparseRFRow = {}
        offset = 0
        for source in probes:
            image = weyl_apply(op, source)
            target_degree = source.homogeneous_degree() + d
            columns = monomials_of_degree(n, target_degree)
            index = {m: j for j, m in enumerate(columns)}
            for mono, coeff in image.terms.items():
                row[offset + index[mono]] = coeff
            offset += len(columns)
        rows.append(row)
    ncols = 0
    for source in probes:
        ncols += len(monomials_of_degree(n, source.homogeneous_degree() + d))
    # Transpose: operators are the vectors whose dependencies we want.
    columns_per_op = len(lams)
    transposed: list[SparseRFRow] = [dict() for _ in range(ncols)]
    for op_index, row in enumerate(rows):
        for j, coeff in row.items():
            transposed[j][op_index] = coeff
    int_rows = rf_rows_to_int(r for r in transposed if r)
    pivots, reduced = reduced_echelon(int_rows, columns_per_op)
    vecs = kernel_basis(pivots, reduced, columns_per_op)
    relations = tuple(
        {lams[j]: coeff for j, coeff in sorted(vec.items())} for vec in vecs
    )
    return OperatorSpanRank(n, d, lams, len(pivots), relations)

"""Divided differences, Schubert polynomials, and the commutant search.

The operators d_i(f) = (f - s_i f)/(x_i - x_{i+1}) realize the Hecke algebra
at v1 = v2 = 0: they square to zero, satisfy the braid relations, and
commute with multiplication by symmetric polynomials.  Schubert polynomials
are d_{sigma omega}(x^rho) with rho the staircase exponent.  The commutant
search looks for graded degree -1 operators commuting with a generating set
of Weyl operators, the machinery that fails for nonzero q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NonReducedWordError
from .linalg import (
    SparseRFRow,
    kernel_basis,
    reduced_echelon,
    rf_rows_to_int,
)
from .polynomials import Monomial, Polynomial, monomials_of_degree
from .scalars import QParam, RF_ZERO, RationalFunction
from .steenrod import make_pk
from .weyl import WeylElement, weyl_apply

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_perm(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def transposition(n: int, i: int) -> Perm:
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def compose_perms(a: Perm, b: Perm) -> Perm:
    """(a b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inversions(sigma: Perm) -> int:
    n = len(sigma)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )


def word_to_perm(word: Sequence[int], n: int) -> Perm:
    """The permutation s_{j1} s_{j2} ... s_{jk} (rightmost acts first)."""
    out = identity_perm(n)
    for j in word:
        out = compose_perms(out, transposition(n, j))
    return out


def is_reduced(word: Sequence[int], n: int) -> bool:
    return inversions(word_to_perm(word, n)) == len(word)


def reduced_word(sigma: Perm) -> tuple[int, ...]:
    """A reduced word for sigma (bubble sort on descents)."""
    n = len(sigma)
    current = list(sigma)
    reversed_word = []
    while True:
        for i in range(n - 1):
            if current[i] > current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                reversed_word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(reversed_word))


def all_perms(n: int) -> Iterator[Perm]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield p


def all_reduced_words(sigma: Perm) -> list[tuple[int, ...]]:
    """Every reduced word of sigma (for braid-independence checks)."""
    if sigma == identity_perm(len(sigma)):
        return [()]
    n = len(sigma)
    out = []
    for i in range(1, n):
        if sigma[i - 1] > sigma[i]:
            shorter = compose_perms(sigma, transposition(n, i))
            out.extend(word + (i,) for word in all_reduced_words(shorter))
    return out


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), exactly, degree drops by one."""
    n = f.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"divided difference index {i} out of 1..{n - 1}")
    terms: dict[Monomial, RationalFunction] = {}
    for mono, coeff in f.terms.items():
        a, b = mono[i - 1], mono[i]
        if a == b:
            continue
        lo = min(a, b)
        span = abs(a - b)
        sign = coeff if a > b else -coeff
        for s in range(span):
            key = (
                mono[: i - 1] + (lo + s, a + b - 1 - lo - s) + mono[i + 1 :]
            )
            acc = terms.get(key, RF_ZERO) + sign
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
    return Polynomial(n, terms)


def apply_word(word: Sequence[int], f: Polynomial) -> Polynomial:
    """d_{j1} d_{j2} ... d_{jk} applied to f (rightmost acts first)."""
    out = f
    for j in reversed(word):
        out = divided_difference(j, out)
    return out


def staircase_exponent(n: int) -> Monomial:
    return tuple(range(n - 1, -1, -1))


def schubert_polynomial(sigma: Perm, n: int | None = None) -> Polynomial:
    """d_{sigma omega} applied to x^(n-1, n-2, ..., 0)."""
    size = n or len(sigma)
    if len(sigma) != size:
        sigma = sigma + tuple(range(len(sigma) + 1, size + 1))
    word = reduced_word(compose_perms(sigma, longest_perm(size)))
    return apply_word(word, Polynomial.monomial(size, staircase_exponent(size)))


@dataclass(frozen=True)
class GradedOperator:
    """A graded linear map of fixed degree shift given by per-degree blocks.

    blocks[d] maps the degree-d monomial coefficient vector to the degree
    d + shift one; monomials are indexed in descending lex order.
    """

    n: int
    shift: int
    cap: int
    blocks: tuple[tuple[tuple[RationalFunction, ...], ...], ...]

    @staticmethod
    def from_callable(n: int, shift: int, cap: int, func) -> "GradedOperator":
        blocks = []
        for d in range(cap + 1):
            sources = monomials_of_degree(n, d)
            targets = monomials_of_degree(n, d + shift) if d + shift >= 0 else []
            tindex = {m: j for j, m in enumerate(targets)}
            block = [[RF_ZERO] * len(sources) for _ in targets]
            for j, mono in enumerate(sources):
                image = func(Polynomial.monomial(n, mono))
                for tmono, coeff in image.terms.items():
                    block[tindex[tmono]][j] = coeff
            blocks.append(tuple(tuple(row) for row in block))
        return GradedOperator(n, shift, cap, tuple(blocks))

    def apply(self, p: Polynomial) -> Polynomial:
        d = p.homogeneous_degree()
        if d < 0:
            return p
        if d > self.cap:
            raise ValueError(f"degree {d} beyond the operator cap {self.cap}")
        sources = monomials_of_degree(self.n, d)
        targets = monomials_of_degree(self.n, d + self.shift)
        block = self.blocks[d]
        terms: dict[Monomial, RationalFunction] = {}
        for r, tmono in enumerate(targets):
            acc = RF_ZERO
            for j, mono in enumerate(sources):
                coeff = p.coefficient(mono)
                if coeff and block[r][j]:
                    acc = acc + block[r][j] * coeff
            if acc:
                terms[tmono] = acc
        return Polynomial(self.n, terms)

    def is_zero(self) -> bool:
        return all(
            not entry for block in self.blocks for row in block for entry in row
        )


def d_sigma(word: Sequence[int], n: int, cap: int) -> GradedOperator:
    """Blocks of d_{j1}...d_{jk} for a reduced word; rejects unreduced words."""
    if not is_reduced(word, n):
        raise NonReducedWordError(f"{tuple(word)} is not reduced")
    return GradedOperator.from_callable(
        n, -len(word), cap, lambda p: apply_word(word, p)
    )


def default_commutant_generators(n: int, q: QParam) -> list[WeylElement]:
    """P_1..P_n at q = 0 (multiplication by power sums); else P_1, P_2."""
    degrees = range(1, n + 1) if q.is_zero else (1, 2)
    return [make_pk(n, k, q) for k in degrees]


def commutant_search(
    n: int,
    cap: int,
    q: QParam,
    generators: Sequence[WeylElement] | None = None,
    right_generators: Sequence[WeylElement] | None = None,
) -> list[GradedOperator]:
    """Degree -1 graded operators T with G T = T H for each generator pair.

    By default H = G (the plain commutant).  Passing right_generators of the
    same gradings solves the skew variant G T = T H instead, one fixed H per
    G; this is exploratory machinery, nothing is asserted about it.  The
    unknown is one block per degree 1..cap; each equation is imposed on the
    degrees d where both composites stay inside the cap (d + deg G <= cap).
    Returns an echelonized basis of the solution space.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = (
        list(generators)
        if generators is not None
        else default_commutant_generators(n, q)
    )
    rights = list(right_generators) if right_generators is not None else gens
    if len(rights) != len(gens):
        raise ValueError("one right generator per left generator")
    for g, h in zip(gens, rights):
        if g.grading() != h.grading():
            raise ValueError("paired generators must share their grading")
    dims = [len(monomials_of_degree(n, d)) for d in range(cap + 1)]
    offsets = [0] * (cap + 1)
    total = 0
    for d in range(1, cap + 1):
        offsets[d] = total
        total += dims[d - 1] * dims[d]

    def unknown(d: int, r: int, c: int) -> int:
        return offsets[d] + r * dims[d] + c

    mono_index = [
        {m: j for j, m in enumerate(monomials_of_degree(n, d))}
        for d in range(cap + 2)
    ]
    images: dict[tuple[int, int, int], Polynomial] = {}

    def image(op_key: int, op: WeylElement, d: int, j: int) -> Polynomial:
        key = (op_key, d, j)
        if key not in images:
            mono = monomials_of_degree(n, d)[j]
            images[key] = weyl_apply(op, Polynomial.monomial(n, mono))
        return images[key]

    equations: list[SparseRFRow] = []
    for gi, (gen, right) in enumerate(zip(gens, rights)):
        k = gen.grading()
        for d in range(0, cap + 1):
            if d + k > cap:
                continue
            # for each source monomial of degree d and each target monomial of
            # degree d + k - 1: (G T - T H) entry must vanish
            for j in range(dims[d]):
                row_acc: dict[int, dict[int, RationalFunction]] = {}
                # G o T: T sends source j to degree d-1 basis, then G acts
                if d >= 1:
                    for r in range(dims[d - 1]):
                        img = image(2 * gi, gen, d - 1, r)
                        for tmono, coeff in img.terms.items():
                            t = mono_index[d + k - 1][tmono]
                            row_acc.setdefault(t, {})[unknown(d, r, j)] = coeff
                # T o H: H sends source j to degree d+k, then T_{d+k} acts
                img = image(2 * gi + 1, right, d, j)
                for gmono, coeff in img.terms.items():
                    c = mono_index[d + k][gmono]
                    for t in range(dims[d + k - 1]):
                        cell = row_acc.setdefault(t, {})
                        idx = unknown(d + k, t, c)
                        cell[idx] = cell.get(idx, RF_ZERO) - coeff
                for t, cells in row_acc.items():
                    row = {idx: v for idx, v in cells.items() if v}
                    if row:
                        equations.append(row)
    int_rows = rf_rows_to_int(equations)
    pivots, reduced = reduced_echelon(int_rows, total)
    vecs = kernel_basis(pivots, reduced, total)
    solutions = []
    for vec in vecs:
        blocks = []
        for d in range(cap + 1):
            rows_d = dims[d - 1] if d >= 1 else 0
            block = tuple(
                tuple(
                    vec.get(unknown(d, r, c), RF_ZERO) for c in range(dims[d])
                )
                for r in range(rows_d)
            )
            blocks.append(block)
        solutions.append(GradedOperator(n, -1, cap, tuple(blocks)))
    return solutions


def operator_in_span(
    op: GradedOperator, basis: Sequence[GradedOperator]
) -> bool:
    """Whether op lies in the span of a family of graded operators."""

    def flatten(o: GradedOperator) -> SparseRFRow:
        out: SparseRFRow = {}
        idx = 0
        for block in o.blocks:
            for row in block:
                for entry in row:
                    if entry:
                        out[idx] = entry
                    idx += 1
        return out

    rows = [flatten(b) for b in basis]
    target = flatten(op)
    ncols = 0
    for block in op.blocks:
        for row in block:
            ncols += len(row)
    base_rank = sparse_rank_of(rows, ncols)
    return sparse_rank_of(rows + [target], ncols) == base_rank


def sparse_rank_of(rows: Sequence[SparseRFRow], ncols: int) -> int:
    return len(reduced_echelon(rf_rows_to_int(rows), ncols)[0])

"""Sparse multivariate polynomials over Q(q).

Monomials are exponent tuples of fixed length n; the monomial order is
lexicographic with x1 > x2 > ... > xn, which for same-length tuples is plain
tuple comparison.  The scalar product used throughout weighs the monomial
x^K against itself by K! = k1! k2! ... kn!.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Callable, Iterable, Iterator

from .errors import InhomogeneousError, VariableCountMismatchError
from .scalars import RF_ONE, RF_ZERO, RationalFunction, _coerce

Monomial = tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of total degree d, in descending lex order."""
    if n == 0:
        return [()] if d == 0 else []
    out: list[Monomial] = []

    def rec(prefix: tuple[int, ...], left: int, k: int) -> None:
        if k == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, k - 1)

    rec((), d, n)
    return out


def monomials_up_to_degree(n: int, cap: int) -> list[Monomial]:
    out = []
    for d in range(cap + 1):
        out.extend(monomials_of_degree(n, d))
    return out


class Polynomial:
    """A sparse polynomial; terms map exponent tuples to nonzero scalars."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Monomial, RationalFunction] | None = None):
        self.n = n
        clean: dict[Monomial, RationalFunction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != n:
                    raise VariableCountMismatchError(
                        f"exponent vector {mono} has length != {n}"
                    )
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n)

    @staticmethod
    def one(n: int) -> "Polynomial":
        return Polynomial(n, {(0,) * n: RF_ONE})

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise VariableCountMismatchError(f"variable index {i} out of 1..{n}")
        exps = tuple(1 if j == i - 1 else 0 for j in range(n))
        return Polynomial(n, {exps: RF_ONE})

    @staticmethod
    def monomial(n: int, exps: Iterable[int], coeff=RF_ONE) -> "Polynomial":
        return Polynomial(n, {tuple(exps): _coerce(coeff)})

    def coefficient(self, mono: Monomial) -> RationalFunction:
        return self.terms.get(tuple(mono), RF_ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a homogeneous polynomial; raises on mixed degrees."""
        degrees = {sum(m) for m in self.terms}
        if len(degrees) > 1:
            raise InhomogeneousError(f"mixed degrees {sorted(degrees)}")
        return degrees.pop() if degrees else -1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self) -> RationalFunction:
        return self.terms[self.leading_monomial()]

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise VariableCountMismatchError(
                f"operands in {self.n} and {other.n} variables"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono, RF_ZERO) + coeff
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out.n, out.terms = self.n, terms
        return out

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms: dict[Monomial, RationalFunction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc = terms.get(mono, RF_ZERO) + c1 * c2
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out.n, out.terms = self.n, terms
        return out

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, scalar) -> "Polynomial":
        c = _coerce(scalar)
        if c is NotImplemented:
            return NotImplemented
        if not c:
            return Polynomial.zero(self.n)
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {m: v * c for m, v in self.terms.items()}
        return out

    def __pow__(self, e: int) -> "Polynomial":
        out = Polynomial.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def extended(self, n: int) -> "Polynomial":
        """The same polynomial viewed in n >= self.n variables."""
        if n < self.n:
            raise VariableCountMismatchError(f"cannot shrink {self.n} -> {n}")
        pad = (0,) * (n - self.n)
        return Polynomial(n, {m + pad: c for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, RationalFunction]]:
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors)
            cs = str(coeff)
            if body:
                if cs == "1":
                    text = body
                elif cs == "-1":
                    text = f"-{body}"
                else:
                    if ("+" in cs or "-" in cs[1:] or "/" in cs) and not (
                        cs.startswith("(") or cs.startswith("-(")
                    ):
                        cs = f"({cs})"
                    text = f"{cs}*{body}"
            else:
                text = cs
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact product of two polynomials over the same variables."""
    return a * b


def permute_variables(p: Polynomial, sigma: tuple[int, ...]) -> Polynomial:
    """Apply the substitution x_i -> x_sigma(i) (sigma in one-line notation)."""
    terms: dict[Monomial, RationalFunction] = {}
    for mono, coeff in p.terms.items():
        new = [0] * p.n
        for i, e in enumerate(mono):
            new[sigma[i] - 1] = e
        terms[tuple(new)] = coeff
    return Polynomial(p.n, terms)


def symmetrize_orbit(n: int, exps: Monomial) -> Polynomial:
    """Sum of the distinct monomials in the symmetric-group orbit of x^exps."""
    seen = {tuple(exps[j] for j in perm) for perm in permutations(range(n))}
    return Polynomial(n, {m: RF_ONE for m in seen})


def factorial_weight(mono: Monomial) -> int:
    """The weight K! = k1! k2! ... kn! of the diagonal scalar product."""
    w = 1
    for e in mono:
        w *= math.factorial(e)
    return w


def scalar_product(
    p: Polynomial,
    r: Polynomial,
    weights: Callable[[Monomial], int] | None = None,
) -> RationalFunction:
    """Diagonal scalar product; by default <x^K, x^K> = K!."""
    if p.n != r.n:
        raise VariableCountMismatchError("scalar product across variable counts")
    weigh = weights or factorial_weight
    acc = RF_ZERO
    for mono, coeff in p.terms.items():
        other = r.terms.get(mono)
        if other is not None:
            acc = acc + coeff * other * _coerce(weigh(mono))
    return acc


def iter_homogeneous_parts(p: Polynomial) -> Iterator[tuple[int, Polynomial]]:
    by_degree: dict[int, dict[Monomial, RationalFunction]] = {}
    for mono, coeff in p.terms.items():
        by_degree.setdefault(sum(mono), {})[mono] = coeff
    for d in sorted(by_degree):
        yield d, Polynomial(p.n, by_degree[d])

"""Exact scalars: integer polynomials in q and the fraction field Q(q).

Every coefficient in the library is a :class:`RationalFunction`, a quotient of
two integer polynomials in the deformation parameter q kept in a canonical
form, so equality is structural and all computations are exact.  The
deformation parameter itself is described by :class:`QParam`, which is either
formal (work in Q(q)) or a fixed rational number (work in Q, embedded as the
constant rational functions).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import PoleError, ZeroDenominatorError

# An integer polynomial in q: coefficients by ascending power, no trailing
# zeros.  The zero polynomial is the empty tuple.
IntPoly = tuple[int, ...]

QP_ZERO: IntPoly = ()
QP_ONE: IntPoly = (1,)
QP_Q: IntPoly = (0, 1)


def qp(*coeffs: int) -> IntPoly:
    """Build an integer polynomial from ascending coefficients."""
    return qp_trim(tuple(coeffs))


def qp_trim(coeffs: tuple[int, ...]) -> IntPoly:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def qp_const(c: int) -> IntPoly:
    return (c,) if c else ()


def qp_degree(a: IntPoly) -> int:
    """Degree in q; the zero polynomial has degree -1."""
    return len(a) - 1


def qp_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return qp_trim(tuple(out))


def qp_neg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def qp_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return qp_add(a, qp_neg(b))


def qp_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return QP_ZERO
    if a == QP_ONE:
        return b
    if b == QP_ONE:
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return qp_trim(tuple(out))


def qp_scale(a: IntPoly, c: int) -> IntPoly:
    if c == 0 or not a:
        return QP_ZERO
    if c == 1:
        return a
    return tuple(v * c for v in a)


def qp_pow(a: IntPoly, e: int) -> IntPoly:
    out = QP_ONE
    for _ in range(e):
        out = qp_mul(out, a)
    return out


def qp_eval(a: IntPoly, q0: Fraction) -> Fraction:
    """Evaluate at a rational point (Horner)."""
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * q0 + c
    return acc


def qp_content(a: IntPoly) -> int:
    """Gcd of the coefficients, nonnegative; content of 0 is 0."""
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def qp_primitive(a: IntPoly) -> IntPoly:
    """Divide out the content, keeping the sign of the leading coefficient."""
    g = qp_content(a)
    if g <= 1:
        return a
    return tuple(c // g for c in a)


def qp_div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact division in Z[q]; raises if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return QP_ZERO
    if b == QP_ONE:
        return a
    if len(b) == 1:
        d = b[0]
        if any(c % d for c in a):
            raise ArithmeticError("inexact polynomial division")
        return tuple(c // d for c in a)
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    quot = [0] * (len(a) - len(b) + 1)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        f = c // lb
        quot[i - db] = f
        for j, cb in enumerate(b):
            rem[i - db + j] -= f * cb
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division")
    return qp_trim(tuple(quot))


def qp_pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, in Z[q]."""
    da, db = qp_degree(a), qp_degree(b)
    lb = b[-1]
    rem = list(a)
    for i in range(da, db - 1, -1):
        c = rem[i]
        rem = [v * lb for v in rem]
        if c:
            for j, cb in enumerate(b):
                rem[i - db + j] -= c * cb
        rem[i] = 0
    return qp_trim(tuple(rem))


def qp_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd in Z[q], primitive-PRS, normalized to positive leading coefficient."""
    if not a:
        return b if not b or b[-1] > 0 else qp_neg(b)
    if not b:
        return a if a[-1] > 0 else qp_neg(a)
    ca, cb = qp_content(a), qp_content(b)
    c = math.gcd(ca, cb)
    pa = tuple(v // ca for v in a)
    pb = tuple(v // cb for v in b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        if len(pb) == 1:
            pa = QP_ONE
            break
        r = qp_pseudo_rem(pa, pb)
        pa, pb = pb, qp_primitive(r)
    g = pa if pa[-1] > 0 else qp_neg(pa)
    return qp_scale(g, c)


def qp_lcm(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return QP_ZERO
    return qp_div_exact(qp_mul(a, b), qp_gcd(a, b))


def qp_derivative(a: IntPoly) -> IntPoly:
    return qp_trim(tuple(i * a[i] for i in range(1, len(a))))


def qp_str(a: IntPoly, var: str = "q") -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


@dataclass(frozen=True, slots=True, eq=False)
class RationalFunction:
    """An element of Q(q) as a canonical pair of integer polynomials.

    Canonical form: the denominator is nonzero with positive leading
    coefficient, numerator and denominator have no common polynomial factor,
    and their integer contents are coprime.  Zero is always 0/1, so equality
    is structural; integers and Fractions compare equal to the constants
    they embed to.
    """

    num: IntPoly
    den: IntPoly

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            coerced = _coerce(other)
            return self.num == coerced.num and self.den == coerced.den
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.num) <= 1 and len(self.den) == 1:
            return hash(Fraction(self.num[0] if self.num else 0, self.den[0]))
        return hash((self.num, self.den))

    @staticmethod
    def make(num: IntPoly, den: IntPoly = QP_ONE) -> "RationalFunction":
        if not den:
            raise ZeroDenominatorError("zero denominator in Q(q) scalar")
        if not num:
            return RF_ZERO
        if den == QP_ONE:
            return RationalFunction(num, QP_ONE)
        g = qp_gcd(num, den)
        if g != QP_ONE:
            num = qp_div_exact(num, g)
            den = qp_div_exact(den, g)
        if den[-1] < 0:
            num, den = qp_neg(num), qp_neg(den)
        return RationalFunction(num, den)

    @staticmethod
    def from_int(c: int) -> "RationalFunction":
        return RationalFunction.make(qp_const(c))

    @staticmethod
    def from_fraction(f: Fraction) -> "RationalFunction":
        return RationalFunction.make(qp_const(f.numerator), qp_const(f.denominator))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == QP_ONE and other.den == QP_ONE:
            return RationalFunction.make(qp_add(self.num, other.num))
        return RationalFunction.make(
            qp_add(qp_mul(self.num, other.den), qp_mul(other.num, self.den)),
            qp_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(qp_neg(self.num), self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return _coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == QP_ONE and other.den == QP_ONE:
            return RationalFunction.make(qp_mul(self.num, other.num))
        return RationalFunction.make(
            qp_mul(self.num, other.num), qp_mul(self.den, other.den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDenominatorError("division by zero in Q(q)")
        return RationalFunction.make(
            qp_mul(self.num, other.den), qp_mul(self.den, other.num)
        )

    def __rtruediv__(self, other) -> "RationalFunction":
        return _coerce(other) / self

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return RF_ONE / self ** (-e)
        out = RF_ONE
        for _ in range(e):
            out = out * self
        return out

    @property
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_fraction(self) -> Fraction:
        """The value of a constant element; raises for genuine functions of q."""
        if len(self.num) > 1 or len(self.den) > 1:
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def evaluate(self, q0: Fraction) -> Fraction:
        den = qp_eval(self.den, q0)
        if den == 0:
            raise PoleError(f"pole of {self} at q = {q0}")
        return qp_eval(self.num, q0) / den

    def __str__(self) -> str:
        num = qp_str(self.num)
        if self.den == QP_ONE:
            return num
        den = qp_str(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _coerce(value) -> "RationalFunction":
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, int):
        return RationalFunction.from_int(value)
    if isinstance(value, Fraction):
        return RationalFunction.from_fraction(value)
    return NotImplemented


RF_ZERO = RationalFunction(QP_ZERO, QP_ONE)
RF_ONE = RationalFunction(QP_ONE, QP_ONE)
RF_Q = RationalFunction(QP_Q, QP_ONE)


def rf_normalize(num, den) -> RationalFunction:
    """Canonicalize a numerator/denominator pair of integer polynomials."""
    return RationalFunction.make(qp_trim(tuple(num)), qp_trim(tuple(den)))


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


@dataclass(frozen=True, slots=True)
class QParam:
    """The deformation parameter: formal, or a fixed rational value."""

    value: Fraction | None = None

    @staticmethod
    def formal() -> "QParam":
        return QParam(None)

    @staticmethod
    def rational(num, den: int = 1) -> "QParam":
        return QParam(Fraction(num, den))

    @staticmethod
    def parse(text: str) -> "QParam":
        text = text.strip()
        if text.lower() == "formal":
            return QParam.formal()
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse q value {text!r}")
        return QParam(Fraction(int(m.group(1)), int(m.group(2) or 1)))

    @property
    def is_formal(self) -> bool:
        return self.value is None

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def scalar(self) -> RationalFunction:
        """The parameter as an element of the coefficient field."""
        if self.value is None:
            return RF_Q
        return RationalFunction.from_fraction(self.value)

    def __str__(self) -> str:
        return "formal" if self.value is None else str(self.value)


FORMAL = QParam.formal()
Q_ZERO = QParam.rational(0)
Q_ONE_PARAM = QParam.rational(1)

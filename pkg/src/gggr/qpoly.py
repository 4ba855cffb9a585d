"""Exact univariate polynomials and rational functions in the variable q.

Everything downstream (orders of finite groups of Lie type, Green-function
tables, decomposition coefficients) is an identity of rational functions in
q with rational coefficients, so this layer insists on exactness: values
are `fractions.Fraction`, polynomials are immutable coefficient tuples,
and rational functions are kept in a canonical reduced form (monic
denominator, coprime numerator) so that `==` is mathematical equality.

No floating point enters at any stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class PolyQ:
    """Dense polynomial in q over the rationals.

    Coefficients are stored low degree first with no trailing zeros; the
    zero polynomial has an empty tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coefficients: Iterable[Scalar]) -> "PolyQ":
        coeffs = [_as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> "PolyQ":
        return cls.from_coeffs([value])

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "PolyQ":
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls.from_coeffs([0] * exponent + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    def __add__(self, other) -> "PolyQ":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return PolyQ.from_coeffs(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "PolyQ":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PolyQ":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "PolyQ":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return PolyQ.from_coeffs(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PolyQ":
        if exponent < 0:
            raise ValueError("negative power of a PolyQ; use RatFuncQ")
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["PolyQ", "PolyQ"]:
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(0, len(remainder) - len(other.coeffs) + 1)
        divisor = other.coeffs
        while len(remainder) >= len(divisor):
            factor = remainder[-1] / divisor[-1]
            shift = len(remainder) - len(divisor)
            quotient[shift] = factor
            for i, c in enumerate(divisor):
                remainder[shift + i] -= factor * c
            while remainder and remainder[-1] == 0:
                remainder.pop()
            if not remainder:
                break
        return PolyQ.from_coeffs(quotient), PolyQ.from_coeffs(remainder)

    def __floordiv__(self, other) -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "PolyQ":
        return divmod(self, other)[1]

    def divides(self, other: "PolyQ") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def evaluate(self, point: Scalar) -> Fraction:
        x = _as_fraction(point)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        lead = self.leading()
        return PolyQ(tuple(c / lead for c in self.coeffs))

    def reversed_to_degree(self, degree: int) -> "PolyQ":
        """q^degree * self(1/q); requires degree >= self.degree."""
        if degree < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [Fraction(0)] * (degree + 1 - len(self.coeffs))
        return PolyQ.from_coeffs(list(reversed(padded)))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for exponent in range(self.degree, -1, -1):
            c = self.coefficient(exponent)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = -c if c < 0 else c
            if exponent == 0:
                body = str(magnitude)
            else:
                variable = "q" if exponent == 1 else f"q^{exponent}"
                body = variable if magnitude == 1 else f"{magnitude}*{variable}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        rendered = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            rendered += f" {sign} {body}"
        return rendered

    __repr__ = __str__


def _coerce_poly(value) -> PolyQ:
    if isinstance(value, PolyQ):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyQ.from_coeffs([value])
    return NotImplemented


ZERO = PolyQ(())
ONE = PolyQ((Fraction(1),))
Q = PolyQ((Fraction(0), Fraction(1)))


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@dataclass(frozen=True)
class RatFuncQ:
    """Rational function in q, always in canonical reduced form."""

    num: PolyQ
    den: PolyQ

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self.num, self.den
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            common = poly_gcd(num, den)
            if common.degree > 0:
                num = num // common
                den = den // common
            lead = den.leading()
            if lead != 1:
                num = num * PolyQ.constant(Fraction(1) / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, num, den=ONE) -> "RatFuncQ":
        return cls(_coerce_poly(num), _coerce_poly(den))

    @classmethod
    def from_poly(cls, poly) -> "RatFuncQ":
        return cls(_coerce_poly(poly), ONE)

    @classmethod
    def zero(cls) -> "RatFuncQ":
        return cls(ZERO, ONE)

    @classmethod
    def one(cls) -> "RatFuncQ":
        return cls(ONE, ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_poly(self) -> PolyQ:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def __add__(self, other) -> "RatFuncQ":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFuncQ":
        return RatFuncQ(-self.num, self.den)

    def __sub__(self, other) -> "RatFuncQ":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFuncQ":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFuncQ":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFuncQ":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFuncQ":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RatFuncQ":
        if exponent < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFuncQ(self.den, self.num) ** (-exponent)
        return RatFuncQ(self.num**exponent, self.den**exponent)

    def evaluate(self, point: Scalar) -> Fraction:
        bottom = self.den.evaluate(point)
        if bottom == 0:
            raise ZeroDivisionError(f"pole at q = {point}")
        return self.num.evaluate(point) / bottom

    def subs_qinv(self) -> "RatFuncQ":
        """The rational function q -> self(1/q)."""
        m = max(self.num.degree, self.den.degree, 0)
        return RatFuncQ(self.num.reversed_to_degree(m), self.den.reversed_to_degree(m))

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _coerce_rat(value) -> RatFuncQ:
    if isinstance(value, RatFuncQ):
        return value
    if isinstance(value, (int, Fraction, PolyQ)):
        return RatFuncQ.of(value)
    return NotImplemented


# ----------------------------------------------------------------------
# small exact matrices over RatFuncQ, as lists of row lists


Matrix = Sequence[Sequence[RatFuncQ]]


def mat_identity(n: int) -> list[list[RatFuncQ]]:
    return [
        [RatFuncQ.one() if i == j else RatFuncQ.zero() for j in range(n)]
        for i in range(n)
    ]


def mat_mul(a: Matrix, b: Matrix) -> list[list[RatFuncQ]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(len(b))), RatFuncQ.zero())
            for j in range(len(b[0]))
        ]
        for i in range(len(a))
    ]


def mat_transpose(a: Matrix) -> list[list[RatFuncQ]]:
    return [list(row) for row in zip(*a)]


def mat_inverse(a: Matrix) -> list[list[RatFuncQ]]:
    """Gauss-Jordan inverse over the rational-function field."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse of a non-square matrix")
    work = [list(row) for row in a]
    result = mat_identity(n)
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if not work[r][col].is_zero()), None
        )
        if pivot_row is None:
            raise ValueError("singular matrix")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        result[col], result[pivot_row] = result[pivot_row], result[col]
        pivot = work[col][col]
        work[col] = [entry / pivot for entry in work[col]]
        result[col] = [entry / pivot for entry in result[col]]
        for r in range(n):
            if r == col or work[r][col].is_zero():
                continue
            factor = work[r][col]
            work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
            result[r] = [x - factor * y for x, y in zip(result[r], result[col])]
    return result

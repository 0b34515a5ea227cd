"""Dense exact polynomials over the integers and the rationals.

Coefficients are stored constant term first and trailing zeros are trimmed,
so the zero polynomial has an empty coefficient tuple and degree -1.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction]


def _trim(values: Sequence[Number]) -> Tuple[Number, ...]:
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return tuple(values[:end])


def _format_coefficient(c: Number) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


@dataclass(frozen=True)
class _DensePolynomial:
    coeffs: Tuple[Number, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(self._normalize(c) for c in self.coeffs)))

    @staticmethod
    def _normalize(c):
        raise NotImplementedError

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c: Number):
        return cls((c,))

    @classmethod
    def monomial(cls, c: Number, power: int):
        return cls((0,) * power + (c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, power: int) -> Number:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def _result_type(self, other):
        if isinstance(self, IntPolynomial) and isinstance(other, IntPolynomial):
            return IntPolynomial
        return RatPolynomial

    def _lift(self, other):
        if isinstance(other, _DensePolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        if isinstance(other, Fraction):
            return RatPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        summed = [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        return self._result_type(other)(tuple(summed))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self._result_type(other).zero()
        product: List[Number] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return self._result_type(other)(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = type(self).constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, x: Number) -> Number:
        """Horner evaluation; int in, int out for integer polynomials"""
        value: Number = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def to_json(self) -> List[str]:
        """Coefficients as exact decimal strings, rationals as "p/q", constant first"""
        return [_format_coefficient(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = -c if c < 0 else c
            text = _format_coefficient(magnitude)
            if isinstance(magnitude, Fraction) and magnitude.denominator != 1 and power:
                text = f"({text})"
            if power and magnitude == 1:
                text = ""
            var = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            terms.append((sign, text + var))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in terms[1:]:
            out += f" {sign} {term}"
        return out


@dataclass(frozen=True)
class IntPolynomial(_DensePolynomial):
    """Integer polynomial; houses P(G, x)"""

    @staticmethod
    def _normalize(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} in IntPolynomial")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"IntPolynomial coefficients must be int, got {type(c).__name__}")
        return c

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self.coeffs)

    @classmethod
    def from_json(cls, values: Iterable[str]) -> "IntPolynomial":
        return cls(tuple(int(v) for v in values))


@dataclass(frozen=True)
class RatPolynomial(_DensePolynomial):
    """Rational polynomial; houses Q_eta(G, e, x)"""

    @staticmethod
    def _normalize(c):
        if isinstance(c, float):
            raise TypeError("floating-point coefficients are not allowed")
        return Fraction(c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integer(self) -> IntPolynomial:
        return IntPolynomial(self.coeffs)

    @classmethod
    def from_json(cls, values: Iterable[str]) -> "RatPolynomial":
        return cls(tuple(Fraction(v) for v in values))


def eval_poly(p: _DensePolynomial, x: Number) -> Fraction:
    """Exact value of p at x"""
    if isinstance(x, float):
        raise TypeError("evaluation point must be exact (int or Fraction)")
    return Fraction(p.evaluate(Fraction(x)))

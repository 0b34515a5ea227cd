"""Closed-form bounds of the shape a + b*sqrt(d), compared exactly.

Comparisons move the rational part across and square, so verdicts never
touch floating point; ``approx`` exists for display.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

Rational = Union[int, Fraction]


def _sign(value) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class RadicalBound:
    """The real number a + b*sqrt(d) with rational a, b and integer d >= 0"""
    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError(f"radicand must be non-negative, got {self.d}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def compare(self, value: Rational) -> int:
        """Sign of (self - value)"""
        rest = Fraction(value) - self.a
        radical_sign = _sign(self.b) if self.d else 0
        if radical_sign == 0:
            return -_sign(rest)
        rest_sign = _sign(rest)
        if radical_sign > 0 and rest_sign <= 0:
            return 1
        if radical_sign < 0 and rest_sign >= 0:
            return -1
        # same sign: compare b^2 d with rest^2
        squared = self.b * self.b * self.d - rest * rest
        return _sign(squared) if radical_sign > 0 else -_sign(squared)

    def __ge__(self, value: Rational) -> bool:
        return self.compare(value) >= 0

    def __le__(self, value: Rational) -> bool:
        return self.compare(value) <= 0

    def exact(self) -> Fraction:
        """Value as a rational; only defined when d is a perfect square"""
        root = math.isqrt(self.d)
        if root * root != self.d:
            raise ValueError(f"sqrt({self.d}) is irrational")
        return self.a + self.b * root

    def approx(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.b == 0 or self.d == 0:
            return str(self.a)
        root = math.isqrt(self.d)
        if root * root == self.d:
            return str(self.exact())
        radical = f"sqrt({self.d})" if self.b == 1 else f"{self.b}*sqrt({self.d})"
        return radical if self.a == 0 else f"{self.a} + {radical}"


def fisher_bound(m_h: int) -> RadicalBound:
    """(1/6) m (sqrt(8m + 1) - 3), the triangle bound for a graph with m edges"""
    if m_h < 0:
        raise ValueError(f"edge count must be non-negative, got {m_h}")
    return RadicalBound(Fraction(-m_h, 2), Fraction(m_h, 6), 8 * m_h + 1)


def maxdeg_triangle_bound(m_h: int, t: int) -> RadicalBound:
    """((m - t)/6) (3 + sqrt(8(m - t) + 1)) for a graph whose maximum degree is at least t"""
    if not 0 <= t <= m_h:
        raise ValueError(f"need 0 <= t <= m, got t={t}, m={m_h}")
    rest = m_h - t
    return RadicalBound(Fraction(rest, 2), Fraction(rest, 6), 8 * rest + 1)


def k3free_closed_form(m: int) -> RadicalBound:
    """C(m-2, 2) + 2 sqrt(m) - 3"""
    return RadicalBound(Fraction(comb(m - 2, 2) - 3), Fraction(2), m)


def four_cycle_chain_holds(m: int, c4: int) -> bool:
    """c4 <= (sqrt(m) - 1)^2, decided as (m + 1 - c4)^2 >= 4m with m + 1 >= c4"""
    slack = m + 1 - c4
    return slack >= 0 and slack * slack >= 4 * m

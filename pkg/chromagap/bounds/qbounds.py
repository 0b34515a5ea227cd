"""Lower bounds on Q_eta(G, e, x) from the per-edge NBC counts."""
from fractions import Fraction
from typing import Optional, Union

from ..chromatic.qpoly import q_eval
from ..graph.core import EdgeRef, Graph
from ..models.report import Verdict
from ..nbc.enumeration import NbcProfile, nbc_profile
from ..nbc.ordering import EdgeOrdering

Rational = Union[int, Fraction]


def theorem23_bound(profile: NbcProfile, n: int, m: int, e: EdgeRef, x: Rational) -> Fraction:
    """sum_{i odd} |NBC_i(G,e)|/i (x - m + i) x^(n-i-1) over 1 <= i <= n-1"""
    x = Fraction(x)
    return sum(
        (Fraction(profile.per_edge(e, i), i) * (x - m + i) * x ** (n - i - 1) for i in range(1, n, 2)),
        Fraction(0),
    )


def theorem23_even_bound(profile: NbcProfile, n: int, m: int, e: EdgeRef, x: Rational) -> Fraction:
    """The even-n refinement: odd i up to n-3, then |NBC_{n-1}(G,e)|/(n-1) x"""
    if n % 2:
        raise ValueError("the refined bound needs an even vertex count")
    x = Fraction(x)
    head = sum(
        (Fraction(profile.per_edge(e, i), i) * (x - m + i) * x ** (n - i - 1) for i in range(1, n - 2, 2)),
        Fraction(0),
    )
    return head + Fraction(profile.per_edge(e, n - 1), n - 1) * x


def corollary25_bound(n: int, nbc2_contracted: int, x: Rational) -> Fraction:
    """|NBC_2(G/e)| x / 3 when n = 4, else (2/3) |NBC_2(G/e)| x^(n-4)"""
    x = Fraction(x)
    if n == 4:
        return Fraction(nbc2_contracted) * x / 3
    return Fraction(2 * nbc2_contracted, 3) * x ** (n - 4)


def corollary25_middle(profile: NbcProfile, n: int, e: EdgeRef, x: Rational) -> Fraction:
    """sum_{i odd, 3 <= i <= n-1} (i-1)/i |NBC_i(G,e)| x^(n-i-1)"""
    x = Fraction(x)
    return sum(
        (Fraction((i - 1) * profile.per_edge(e, i), i) * x ** (n - i - 1) for i in range(3, n, 2)),
        Fraction(0),
    )


def theorem35_bound(n: int, x: Rational, c: Rational) -> Fraction:
    """(2c/3) x^(n-4); a negative exponent stays an exact rational"""
    return Fraction(2, 3) * Fraction(c) * Fraction(x) ** (n - 4)


def q_lower_theorem35(g: Graph, eta: EdgeOrdering, e: EdgeRef, x: Rational, c: Rational,
                      profile: Optional[NbcProfile] = None) -> Verdict:
    """Compare Q_eta(G, e, x) with (2c/3) x^(n-4) when x >= m-1 >= 3"""
    g.check_edge(e)
    if g.m - 1 < 3 or x < g.m - 1:
        return Verdict.NOT_APPLICABLE
    profile = profile or nbc_profile(g, eta)
    value = q_eval(g, eta, e, x, profile)
    return Verdict.HOLDS if value >= theorem35_bound(g.n, x, c) else Verdict.VIOLATED

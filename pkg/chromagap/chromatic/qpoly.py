from fractions import Fraction
from typing import Optional, Union

from ..graph.core import EdgeRef, Graph
from ..nbc.enumeration import NbcProfile, nbc_profile
from ..nbc.ordering import EdgeOrdering
from .polynomial import RatPolynomial, eval_poly


def q_poly(g: Graph, eta: EdgeOrdering, e: EdgeRef, profile: Optional[NbcProfile] = None) -> RatPolynomial:
    """Q_eta(G, e, x) = sum_{i odd} |NBC_i(G,e)|/i x^(n-i) - sum_{i even} |NBC_i(G,e)| x^(n-i)"""
    g.check_edge(e)
    profile = profile or nbc_profile(g, eta)
    coeffs = [Fraction(0)] * (g.n + 1)
    for i in range(1, g.n):
        count = profile.per_edge(e, i)
        coeffs[g.n - i] = Fraction(count, i) if i % 2 else Fraction(-count)
    return RatPolynomial(tuple(coeffs))


def q_eval(g: Graph, eta: EdgeOrdering, e: EdgeRef, x: Union[int, Fraction],
           profile: Optional[NbcProfile] = None) -> Fraction:
    return eval_poly(q_poly(g, eta, e, profile), x)

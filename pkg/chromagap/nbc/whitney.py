from typing import Optional

from ..chromatic.polynomial import IntPolynomial
from ..graph.core import Graph
from .enumeration import NbcProfile, nbc_profile
from .ordering import EdgeOrdering


def chromatic_via_whitney(g: Graph, eta: EdgeOrdering, profile: Optional[NbcProfile] = None) -> IntPolynomial:
    """P(G, x) = sum_i (-1)^i |NBC_i(G)| x^(n-i)"""
    profile = profile or nbc_profile(g, eta)
    coeffs = [0] * (g.n + 1)
    for i, count in enumerate(profile.counts_total):
        coeffs[g.n - i] = -count if i % 2 else count
    return IntPolynomial(tuple(coeffs))

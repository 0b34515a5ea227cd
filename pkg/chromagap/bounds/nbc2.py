"""|NBC_2| identities and lower bounds on |NBC_2(G/e)|."""
from fractions import Fraction
from math import comb
from typing import NamedTuple

from ..config.exceptions import NotApplicableError
from ..graph.core import Graph
from ..graph.stats import c4, triangle_count
from .radicals import k3free_closed_form


class K3FreeBound(NamedTuple):
    exact: int
    display: float


def nbc2_closed_form(h: Graph) -> int:
    """|NBC_2(H)| = C(|E(H)|, 2) - triangles(H)"""
    return comb(h.m, 2) - triangle_count(h)


def nbc2_lower_general(m: int) -> Fraction:
    """(m-1)(m-3)/8, valid for every edge of a graph with m >= 4 edges"""
    if m < 4:
        raise NotApplicableError(f"m >= 4 required, got m={m}")
    return Fraction((m - 1) * (m - 3), 8)


def nbc2_lower_k3free(g: Graph) -> K3FreeBound:
    """C(m-1, 2) - c4(G) for triangle-free G with m >= 3, with C(m-2, 2) + 2 sqrt(m) - 3 for display"""
    if g.m < 3:
        raise NotApplicableError(f"m >= 3 required, got m={g.m}")
    if triangle_count(g) > 0:
        raise NotApplicableError("graph has a triangle")
    return K3FreeBound(comb(g.m - 1, 2) - c4(g), k3free_closed_form(g.m).approx())

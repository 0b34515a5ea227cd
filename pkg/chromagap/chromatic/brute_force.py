"""Brute-force coloring counts and polynomial reconstruction from them."""
from fractions import Fraction
from typing import List

from ..config.exceptions import BudgetExceededError, PreconditionError
from ..graph.core import Graph
from .polynomial import IntPolynomial, RatPolynomial

DEFAULT_COLORING_BUDGET = 10 ** 8


def count_proper_colorings(g: Graph, k: int, budget: int = DEFAULT_COLORING_BUDGET) -> int:
    """Number of proper k-colorings, by backtracking over vertices in index order.

    Raises:
        PreconditionError: if k is negative.
        BudgetExceededError: if k^n exceeds ``budget``.
    """
    if k < 0:
        raise PreconditionError(f"color count must be non-negative, got {k}")
    required = k ** g.n
    if required > budget:
        raise BudgetExceededError("proper coloring leaves", required=required, budget=budget)

    # only earlier neighbours constrain a vertex
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(g.n)]
    colors: List[int] = [-1] * g.n
    last = g.n - 1

    def extend(v: int) -> int:
        blocked = {colors[w] for w in earlier[v]}
        if v == last:
            return k - len(blocked)
        total = 0
        for c in range(k):
            if c not in blocked:
                colors[v] = c
                total += extend(v + 1)
        colors[v] = -1
        return total

    return extend(0)


def chromatic_by_interpolation(g: Graph, budget: int = DEFAULT_COLORING_BUDGET) -> IntPolynomial:
    """Lagrange-interpolate P(G, x) through the counts at k = 0..n"""
    points = [(k, count_proper_colorings(g, k, budget)) for k in range(g.n + 1)]
    result = RatPolynomial.zero()
    for j, (xj, yj) in enumerate(points):
        if yj == 0:
            continue
        basis = RatPolynomial.constant(Fraction(yj))
        for i, (xi, _) in enumerate(points):
            if i != j:
                basis = basis * RatPolynomial((Fraction(-xi, xj - xi), Fraction(1, xj - xi)))
        result = result + basis
    return result.to_integer()

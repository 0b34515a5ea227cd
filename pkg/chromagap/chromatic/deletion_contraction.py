"""P(G, x) through the deletion-contraction recurrence P(G) = P(G - e) - P(G / e)."""
from typing import Dict, Tuple

from ..config.exceptions import BudgetExceededError
from ..graph.core import Edge, Graph
from ..utils.logging import get_logger
from .polynomial import IntPolynomial

logger = get_logger("chromagap.chromatic")

DEFAULT_MAX_EDGES = 24

_Key = Tuple[int, Tuple[Edge, ...]]


def _forest_polynomial(n: int, edges: Tuple[Edge, ...]) -> IntPolynomial:
    # a forest with c trees: x^c (x - 1)^(n - c)
    return IntPolynomial.x() ** (n - len(edges)) * IntPolynomial((-1, 1)) ** len(edges)


def _is_forest(n: int, edges: Tuple[Edge, ...]) -> bool:
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _contract(n: int, edges: Tuple[Edge, ...], e: int) -> _Key:
    u, v = edges[e]
    image = [u if w == v else (w - 1 if w > v else w) for w in range(n)]
    merged = set()
    for f, (a, b) in enumerate(edges):
        if f == e:
            continue
        x, y = image[a], image[b]
        merged.add((x, y) if x < y else (y, x))
    return n - 1, tuple(sorted(merged))


def _pick_edge(n: int, edges: Tuple[Edge, ...]) -> int:
    # an edge at a vertex of maximum degree tends to reach forests soonest
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return max(range(len(edges)), key=lambda f: (degree[edges[f][0]] + degree[edges[f][1]], -f))


def chromatic_deletion_contraction(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> IntPolynomial:
    """Chromatic polynomial by memoized deletion-contraction.

    The memo lives for this call only and is keyed on the canonical edge list
    of each renumbered minor.

    Raises:
        BudgetExceededError: if g has more than ``max_edges`` edges.
    """
    if g.m > max_edges:
        raise BudgetExceededError("deletion-contraction edges", required=g.m, budget=max_edges)

    memo: Dict[_Key, IntPolynomial] = {}

    def solve(n: int, edges: Tuple[Edge, ...]) -> IntPolynomial:
        key = (n, edges)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if _is_forest(n, edges):
            result = _forest_polynomial(n, edges)
        else:
            e = _pick_edge(n, edges)
            deleted = edges[:e] + edges[e + 1:]
            result = solve(n, deleted) - solve(*_contract(n, edges, e))
        memo[key] = result
        return result

    polynomial = solve(g.n, g.edges)
    logger.debug(f"Deletion-contraction on {g}: {len(memo)} minors memoized")
    return polynomial

"""Exact list-coloring counts P(G, L).

Two independent algorithms: vertex backtracking with forward checking, and
inclusion-exclusion over NBC forests,

    P(G, L) = sum_i (-1)^i sum_{F in NBC-forests_i} prod_j beta(T_j).
"""
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, List, Optional

from ..config.exceptions import BudgetExceededError, OracleMismatchError
from ..graph.core import Graph
from ..nbc.enumeration import NbcForest, iter_nbc_forests, nbc_forests
from ..nbc.ordering import EdgeOrdering
from ..utils.logging import get_logger
from ..utils.parallel import apply_pool
from .assignment import ListAssignment, beta

logger = get_logger("chromagap.listcolor")

DEFAULT_LIST_BUDGET = 10 ** 8


def _count_component(g: Graph, la: ListAssignment, comp: List[int]) -> int:
    order = sorted(comp, key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    later = [[w for w in g.adjacency[v] if pos[w] > i] for i, v in enumerate(order)]

    # vertices order[suffix:] are pairwise non-adjacent, so once everything
    # before them is colored they contribute a plain product
    suffix = len(order)
    while suffix > 0 and not any(pos[w] >= suffix for w in g.adjacency[order[suffix - 1]]):
        suffix -= 1

    blocked: Dict[int, Dict[int, int]] = {v: dict.fromkeys(la.lists[v], 0) for v in comp}
    free = {v: len(la.lists[v]) for v in comp}

    def extend(p: int) -> int:
        if p == suffix:
            return prod(free[order[q]] for q in range(suffix, len(order)))
        v = order[p]
        total = 0
        for c in la.lists[v]:
            if blocked[v][c]:
                continue
            touched = []
            dead = False
            for w in later[p]:
                row = blocked[w]
                if c in row:
                    row[c] += 1
                    if row[c] == 1:
                        free[w] -= 1
                        dead = dead or free[w] == 0
                    touched.append(w)
            if not dead:
                total += extend(p + 1)
            for w in touched:
                row = blocked[w]
                row[c] -= 1
                if row[c] == 0:
                    free[w] += 1
        return total

    return extend(0)


def count_list_colorings(g: Graph, la: ListAssignment, budget: int = DEFAULT_LIST_BUDGET) -> int:
    """P(G, L) by backtracking, component by component.

    Raises:
        BudgetExceededError: if the product of list sizes exceeds ``budget``.
    """
    la.require_graph(g)
    leaves = prod(len(colors) for colors in la.lists)
    if leaves > budget:
        raise BudgetExceededError("list coloring leaves", required=leaves, budget=budget)
    total = 1
    for comp in g.components():
        total *= _count_component(g, la, comp)
        if total == 0:
            break
    return total


def forest_weight(la: ListAssignment, forest: NbcForest) -> int:
    """prod_j beta(T_j) over the trees of the forest"""
    weight = 1
    for tree in forest.components:
        weight *= beta(la, tree)
        if weight == 0:
            break
    return weight


def _size_class_sum(g: Graph, eta: EdgeOrdering, la: ListAssignment, i: int) -> int:
    return sum(forest_weight(la, forest) for forest in nbc_forests(g, eta, i))


def count_list_colorings_nbc(g: Graph, eta: EdgeOrdering, la: ListAssignment,
                             forests: Optional[Iterable[NbcForest]] = None, workers: int = 1) -> int:
    """P(G, L) by inclusion-exclusion over NBC forests.

    With ``workers > 1`` the size classes are summed in separate processes and
    the partial sums combined exactly.
    """
    la.require_graph(g)
    eta.require_graph(g)
    if forests is not None:
        return sum(-forest_weight(la, f) if f.size % 2 else forest_weight(la, f) for f in forests)
    if workers > 1:
        sizes = range(g.n)
        partial = apply_pool(_size_class_sum, [(g, eta, la, i) for i in sizes], workers=workers,
                             desc="forest classes")
        return sum(-s if i % 2 else s for i, s in zip(sizes, partial))
    return count_list_colorings_nbc(g, eta, la, forests=iter_nbc_forests(g, eta))


@dataclass(frozen=True)
class GapValue:
    list_count: int
    chromatic_count: int

    @property
    def gap(self) -> int:
        return self.list_count - self.chromatic_count


def gap_details(g: Graph, la: ListAssignment, k: int, eta: Optional[EdgeOrdering] = None,
                budget: int = DEFAULT_LIST_BUDGET) -> GapValue:
    """P(G, L) and P(G, k), each from two independent computations.

    P(G, L) comes from backtracking and is cross-checked against the forest
    expansion; P(G, k) is Whitney's expansion on the same forest stream.

    Raises:
        AssignmentError: if L is not k-uniform.
        OracleMismatchError: if the two P(G, L) computations disagree.
    """
    la.require_graph(g).require_uniform(k)
    eta = eta or EdgeOrdering.canonical(g)
    eta.require_graph(g)
    list_count = count_list_colorings(g, la, budget)

    by_forests = 0
    chromatic_count = 0
    for forest in iter_nbc_forests(g, eta):
        sign = -1 if forest.size % 2 else 1
        by_forests += sign * forest_weight(la, forest)
        chromatic_count += sign * k ** (g.n - forest.size)

    if by_forests != list_count:
        logger.error(f"P(G,L) mismatch on {g}: backtracking {list_count}, NBC forests {by_forests}")
        raise OracleMismatchError(
            f"P(G,L) disagreement on {g}: backtracking gives {list_count}, NBC forests give {by_forests}"
        )
    return GapValue(list_count, chromatic_count)


def gap(g: Graph, la: ListAssignment, k: int, eta: Optional[EdgeOrdering] = None,
        budget: int = DEFAULT_LIST_BUDGET) -> int:
    """P(G, L) - P(G, k) for a k-assignment L"""
    return gap_details(g, la, k, eta, budget).gap


def gap_expansion(g: Graph, eta: EdgeOrdering, la: ListAssignment, k: int) -> int:
    """sum_{i>=1} (-1)^i sum_F (prod_j beta(T_j) - k^(n-i)), the forest form of the gap"""
    la.require_graph(g).require_uniform(k)
    total = 0
    for forest in iter_nbc_forests(g, eta):
        if forest.size == 0:
            continue
        term = forest_weight(la, forest) - k ** (g.n - forest.size)
        total += -term if forest.size % 2 else term
    return total

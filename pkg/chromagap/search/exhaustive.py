"""Exhaustive P_l(G, k) over a finite color universe."""
from typing import Optional

from ..config.exceptions import BudgetExceededError, PreconditionError
from ..graph.catalog import is_chordal
from ..graph.core import Graph
from ..listcolor.assignment import (
    count_all_assignments,
    count_canonical_assignments,
    iter_all_assignments,
    iter_canonical_assignments,
)
from ..listcolor.counting import DEFAULT_LIST_BUDGET, count_list_colorings
from ..models.search import SearchMethod, SearchResult
from ..nbc.ordering import EdgeOrdering
from ..nbc.whitney import chromatic_via_whitney
from ..utils.logging import get_logger

logger = get_logger("chromagap.search")

DEFAULT_EVALUATION_BUDGET = 10 ** 7


def default_universe(n: int, k: int) -> int:
    return min(n * k, k + n)


def chromatic_value(g: Graph, k: int) -> int:
    return chromatic_via_whitney(g, EdgeOrdering.canonical(g)).evaluate(k)


def exact_pl(g: Graph, k: int, universe: Optional[int] = None,
             budget: int = DEFAULT_EVALUATION_BUDGET,
             leaf_budget: int = DEFAULT_LIST_BUDGET,
             canonical: bool = True) -> SearchResult:
    """Minimum of P(G, L) over every k-assignment drawn from {1..universe}.

    With ``canonical`` each color-renaming class is visited through its
    first-appearance normal forms only. The result is the minimum over this
    universe; it is the true P_l(G, k) once universe >= n*k.

    Raises:
        BudgetExceededError: if the number of assignments to evaluate exceeds ``budget``.
    """
    universe = universe or default_universe(g.n, k)
    if k < 1 or universe < k:
        raise PreconditionError(f"need 1 <= k <= universe, got k={k}, universe={universe}")
    required = (count_canonical_assignments if canonical else count_all_assignments)(g.n, k, universe)
    if required > budget:
        raise BudgetExceededError("k-assignments to evaluate", required=required, budget=budget)

    assignments = (iter_canonical_assignments if canonical else iter_all_assignments)(g.n, k, universe)
    best = None
    evaluated = 0
    for la in assignments:
        evaluated += 1
        value = count_list_colorings(g, la, leaf_budget)
        key = (value, la.canonical_key())
        if best is None or key < best[0]:
            best = (key, la)

    (value, _), la = best
    logger.debug(f"exact P_l on {g} with k={k}, universe={universe}: {value} after {evaluated} assignments")
    return SearchResult(
        best_assignment=la.to_json(),
        best_value=value,
        method=SearchMethod.EXHAUSTIVE,
        iterations=evaluated,
        exhaustive=True,
        universe=universe,
        k=k,
        p_gk=chromatic_value(g, k),
        universe_sufficient=universe >= g.n * k,
        chordal=is_chordal(g),
    )

from fractions import Fraction
from typing import Optional

from ..config.exceptions import BudgetExceededError
from ..graph.catalog import is_chordal
from ..graph.core import Graph
from ..listcolor.counting import DEFAULT_LIST_BUDGET
from ..models.search import ScanRow, ScanTable
from ..utils.logging import get_logger
from .exhaustive import DEFAULT_EVALUATION_BUDGET, default_universe, exact_pl
from .local import heuristic_min

logger = get_logger("chromagap.search")


def threshold_scan(g: Graph, k_max: int, universe: Optional[int] = None,
                   budget: int = DEFAULT_EVALUATION_BUDGET, iterations: int = 200,
                   restarts: int = 4, seed: int = 0, workers: int = 1,
                   leaf_budget: int = DEFAULT_LIST_BUDGET) -> ScanTable:
    """Compare the least P(G, L) found with P(G, k) for k = 2..k_max.

    Each k is searched exhaustively when the budget allows and by local search
    otherwise. From k >= m-1 on every row must be equal.
    """
    table = ScanTable(n=g.n, m=g.m, max_degree=g.max_degree, chordal=is_chordal(g))
    for k in range(2, k_max + 1):
        u = universe or default_universe(g.n, k)
        try:
            result = exact_pl(g, k, u, budget=budget, leaf_budget=leaf_budget)
        except BudgetExceededError as e:
            logger.info(f"k={k}: {e}; falling back to local search")
            result = heuristic_min(g, k, u, iterations=iterations, seed=seed, restarts=restarts,
                                   workers=workers, leaf_budget=leaf_budget)
        applies = k >= g.m - 1
        equal = result.best_value == result.p_gk
        if applies and not equal:
            logger.error(f"k={k} >= m-1 but the least P(G,L) found is {result.best_value} < P(G,k)={result.p_gk}")
        table.rows.append(ScanRow(
            k=k,
            universe=u,
            min_found=result.best_value,
            p_gk=result.p_gk,
            equal=equal,
            method=result.method,
            exhaustive=result.exhaustive,
            corollary_applies=applies,
            corollary_violation=applies and not equal,
        ))

    stable = None
    for row in reversed(table.rows):
        if not row.equal:
            break
        stable = row.k
    table.stable_from = stable
    if stable is not None:
        table.ratio_to_n = str(Fraction(stable, g.n))
        if g.max_degree:
            table.ratio_to_max_degree = str(Fraction(stable, g.max_degree))
    return table

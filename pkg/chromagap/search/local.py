"""Seeded local search for small P(G, L)."""
import random
from typing import List, Optional, Tuple

from ..graph.catalog import is_chordal
from ..graph.core import Graph
from ..listcolor.assignment import ListAssignment, random_assignment
from ..listcolor.counting import DEFAULT_LIST_BUDGET, count_list_colorings
from ..models.search import SearchMethod, SearchResult
from ..utils.logging import get_logger
from ..utils.parallel import apply_pool
from .exhaustive import chromatic_value, default_universe

logger = get_logger("chromagap.search")

_Key = Tuple[int, tuple]


def _neighbors(la: ListAssignment, universe: int):
    """Swap one color of one list for a universe color not in it"""
    for v, colors in enumerate(la.lists):
        absent = [c for c in range(1, universe + 1) if c not in la.sets[v]]
        for old in colors:
            for new in absent:
                lists = list(la.lists)
                lists[v] = tuple(c for c in colors if c != old) + (new,)
                yield ListAssignment(tuple(lists))


def _start(g: Graph, k: int, universe: int, seed: int, restart: int) -> ListAssignment:
    if restart == 0:
        return ListAssignment.constant(g.n, k)
    return random_assignment(g.n, k, universe, seed * 1000003 + restart)


def descend(g: Graph, k: int, universe: int, iterations: int, seed: int, restart: int,
            leaf_budget: int = DEFAULT_LIST_BUDGET) -> Tuple[_Key, List[List[int]], int]:
    """Steepest descent from one start; returns ((value, key), lists, steps taken)"""
    current = _start(g, k, universe, seed, restart)
    best: _Key = (count_list_colorings(g, current, leaf_budget), current.canonical_key())
    steps = 0
    while steps < iterations:
        candidate = None
        for la in _neighbors(current, universe):
            key = (count_list_colorings(g, la, leaf_budget), la.canonical_key())
            if candidate is None or key < candidate[0]:
                candidate = (key, la)
        if candidate is None or candidate[0][0] >= best[0]:
            break
        best, current = candidate
        steps += 1
    return best, current.to_json(), steps


def heuristic_min(g: Graph, k: int, universe: Optional[int] = None, iterations: int = 200,
                  seed: int = 0, restarts: int = 4, workers: int = 1,
                  leaf_budget: int = DEFAULT_LIST_BUDGET) -> SearchResult:
    """Upper bound on the minimum of P(G, L) by restarted steepest descent.

    Restart 0 starts from the constant list {1..k}, so the result never
    exceeds P(G, k). Restarts use independent seeded streams and can run in
    parallel without changing the result.
    """
    universe = universe or default_universe(g.n, k)
    runs = apply_pool(
        descend,
        [(g, k, universe, iterations, seed, r, leaf_budget) for r in range(max(restarts, 1))],
        workers=workers,
        desc="restarts",
    )
    key, lists, _ = min(runs, key=lambda run: run[0])
    steps = sum(run[2] for run in runs)
    logger.debug(f"local search on {g} with k={k}: best {key[0]} after {steps} steps")
    return SearchResult(
        best_assignment=lists,
        best_value=key[0],
        method=SearchMethod.LOCAL_SEARCH,
        iterations=steps,
        seed=seed,
        exhaustive=False,
        universe=universe,
        k=k,
        p_gk=chromatic_value(g, k),
        universe_sufficient=universe >= g.n * k,
        chordal=is_chordal(g),
    )

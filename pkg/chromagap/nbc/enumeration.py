"""Broken cycles, NBC sets and NBC forests.

A broken cycle is the edge set of a cycle minus its eta-minimum edge. An edge
set A is NBC when it contains no broken cycle; equivalently A is acyclic and
no edge f outside A has its endpoints joined by an A-path whose labels all
exceed eta(f).

Enumeration scans edges by decreasing label. When edge f is reached, every
edge that could form a path with labels above eta(f) has been decided, so
the condition on f is final at that point: if its endpoints are already
joined, neither taking f (cycle) nor skipping it (broken cycle) is allowed
and the branch is cut.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..config.exceptions import InvalidEdgeError, PreconditionError
from ..graph.core import EdgeRef, Graph
from ..utils.logging import get_logger
from .ordering import EdgeOrdering

logger = get_logger("chromagap.nbc")


@dataclass(frozen=True)
class NbcForest:
    """Spanning forest (V, A) of an NBC set A"""
    edges: Tuple[EdgeRef, ...]
    components: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def component_edges(self, g: Graph) -> Tuple[Tuple[EdgeRef, ...], ...]:
        """Edges of A grouped by the component (tree) they lie in"""
        where = {}
        for index, comp in enumerate(self.components):
            for v in comp:
                where[v] = index
        grouped: List[List[EdgeRef]] = [[] for _ in self.components]
        for f in self.edges:
            grouped[where[g.edges[f][0]]].append(f)
        return tuple(tuple(group) for group in grouped)


@dataclass(frozen=True)
class NbcProfile:
    """NBC counts: ``counts_total[i]`` = |NBC_i(G)|, ``counts_per_edge[e][i]`` = |NBC_i(G, e)|.

    Both are indexed by i = 0..n-1; ``counts_per_edge[e][0]`` is always 0.
    """
    counts_total: Tuple[int, ...]
    counts_per_edge: Tuple[Tuple[int, ...], ...]

    def total(self, i: int) -> int:
        return self.counts_total[i] if 0 <= i < len(self.counts_total) else 0

    def per_edge(self, e: EdgeRef, i: int) -> int:
        row = self.counts_per_edge[e]
        return row[i] if 0 <= i < len(row) else 0


def _partition(comp: List[int]) -> Tuple[Tuple[int, ...], ...]:
    groups = {}
    for v, root in enumerate(comp):
        groups.setdefault(root, []).append(v)
    return tuple(sorted(tuple(group) for group in groups.values()))


def _walk(g: Graph, eta: EdgeOrdering, size: Optional[int] = None) -> Iterator[Tuple[Tuple[EdgeRef, ...], List[int]]]:
    """Yield (NBC set, component root per vertex); the root list is reused, copy it to keep it"""
    eta.require_graph(g)
    order = tuple(reversed(eta.by_label))
    m = len(order)
    limit = g.n - 1 if size is None else size
    chosen: List[EdgeRef] = []
    comp = list(range(g.n))

    def walk(pos: int):
        if size is not None and len(chosen) + (m - pos) < size:
            return
        if pos == m:
            if size is None or len(chosen) == size:
                yield tuple(sorted(chosen)), comp
            return
        f = order[pos]
        u, v = g.edges[f]
        cu, cv = comp[u], comp[v]
        if cu == cv:
            return
        yield from walk(pos + 1)
        if len(chosen) < limit:
            saved = comp[:]
            for w in range(g.n):
                if comp[w] == cv:
                    comp[w] = cu
            chosen.append(f)
            yield from walk(pos + 1)
            chosen.pop()
            comp[:] = saved

    yield from walk(0)


def _check_subset(g: Graph, a: Iterable[EdgeRef]) -> FrozenSet[EdgeRef]:
    edge_set = frozenset(a)
    for f in edge_set:
        if not isinstance(f, int) or not 0 <= f < g.m:
            raise InvalidEdgeError(f"edge reference {f!r} out of range for m={g.m}")
    return edge_set


def iter_cycles(g: Graph) -> Iterator[FrozenSet[EdgeRef]]:
    """Each simple cycle of g once, as its edge set"""
    adjacency = g.adjacency
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(v: int):
            for w in sorted(adjacency[v]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    vertices = path + [s]
                    yield frozenset(g.edge_ref(a, b) for a, b in zip(vertices, vertices[1:]))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(s)


def broken_cycles(g: Graph, eta: EdgeOrdering) -> List[FrozenSet[EdgeRef]]:
    """Edge sets E(C) minus the eta-minimum edge of C, over all cycles C"""
    found = {cycle - {eta.minimum(cycle)} for cycle in iter_cycles(g)}
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_nbc(g: Graph, eta: EdgeOrdering, a: Iterable[EdgeRef]) -> bool:
    """True iff A contains no broken cycle.

    Sweeps edges by decreasing label: an edge of A whose endpoints are already
    joined closes a cycle, and an edge outside A whose endpoints are already
    joined has an all-larger A-path between them.
    """
    eta.require_graph(g)
    edge_set = _check_subset(g, a)
    comp = list(range(g.n))
    for f in reversed(eta.by_label):
        u, v = g.edges[f]
        cu, cv = comp[u], comp[v]
        if cu == cv:
            return False
        if f in edge_set:
            for w in range(g.n):
                if comp[w] == cv:
                    comp[w] = cu
    return True


def is_nbc_definitional(g: Graph, eta: EdgeOrdering, a: Iterable[EdgeRef]) -> bool:
    """Scan every broken cycle for containment in A; exponential, for cross-checks"""
    edge_set = _check_subset(g, a)
    return not any(broken <= edge_set for broken in broken_cycles(g, eta))


def nbc_profile(g: Graph, eta: EdgeOrdering) -> NbcProfile:
    """Exact |NBC_i(G)| and |NBC_i(G, e)| by enumeration"""
    totals = [0] * g.n
    per_edge = [[0] * g.n for _ in range(g.m)]
    for edges, _ in _walk(g, eta):
        i = len(edges)
        totals[i] += 1
        for f in edges:
            per_edge[f][i] += 1
    logger.debug(f"NBC profile of {g}: {totals}")
    return NbcProfile(tuple(totals), tuple(tuple(row) for row in per_edge))


def iter_nbc_forests(g: Graph, eta: EdgeOrdering) -> Iterator[NbcForest]:
    """Every NBC forest of every size"""
    for edges, comp in _walk(g, eta):
        yield NbcForest(edges, _partition(comp))


def nbc_forests(g: Graph, eta: EdgeOrdering, i: int) -> Iterator[NbcForest]:
    """Stream the NBC forests with exactly i edges (n - i trees)"""
    if not 0 <= i <= g.n - 1:
        raise PreconditionError(f"forest size must lie in [0, {g.n - 1}], got {i}")
    for edges, comp in _walk(g, eta, size=i):
        yield NbcForest(edges, _partition(comp))

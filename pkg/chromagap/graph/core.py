from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from ..config.exceptions import GraphFormatError, InvalidEdgeError

Edge = Tuple[int, int]
# index into Graph.edges
EdgeRef = int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a sorted canonical edge list.

    Construct through ``from_edge_list`` (or the format readers); the
    constructor only checks that the canonical form already holds.
    """
    n: int
    edges: Tuple[Edge, ...]
    name: str = field(default="", compare=False)
    # original input labels, position = dense vertex id
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("graph must have at least one vertex")
        previous = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphFormatError(f"edge {(u, v)} is not a canonical pair in range [0, {self.n})")
            if previous is not None and (u, v) <= previous:
                raise GraphFormatError("edge list is not sorted and duplicate-free")
            previous = (u, v)
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphFormatError("label map must name every vertex")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbors: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @cached_property
    def edge_index(self) -> Dict[Edge, EdgeRef]:
        return {edge: i for i, edge in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def check_edge(self, e: EdgeRef) -> Edge:
        """Return the endpoints of edge ``e`` or raise InvalidEdgeError"""
        if not isinstance(e, int) or not (0 <= e < self.m):
            raise InvalidEdgeError(f"edge reference {e!r} out of range for m={self.m}")
        return self.edges[e]

    def edge_ref(self, u: int, v: int) -> EdgeRef:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise InvalidEdgeError(f"{key} is not an edge")

    def without_edge(self, e: EdgeRef) -> "Graph":
        self.check_edge(e)
        return Graph(self.n, self.edges[:e] + self.edges[e + 1:], name=self.name)

    def vertex_label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def components(self) -> List[List[int]]:
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def __str__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"{label}(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeLabelMap:
    """Pre-images of each edge of G/e in G.

    ``preimages[f]`` lists the edge refs of G that became edge ``f`` of the
    contracted graph (two of them when a parallel pair was merged).
    ``vertex_map[v]`` is the image of vertex v of G.
    """
    preimages: Tuple[Tuple[EdgeRef, ...], ...]
    vertex_map: Tuple[int, ...]
    contracted: EdgeRef


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], name: str = "",
                   labels: Optional[Sequence[str]] = None) -> Graph:
    """Build the canonical simple graph; duplicate pairs collapse, loops are rejected"""
    if not isinstance(n, int) or n < 1:
        raise GraphFormatError(f"vertex count must be a positive integer, got {n!r}")
    canonical = set()
    for pair in pairs:
        if len(pair) != 2:
            raise GraphFormatError(f"edge {tuple(pair)!r} must have exactly two endpoints")
        u, v = pair
        if not isinstance(u, int) or not isinstance(v, int):
            raise GraphFormatError(f"edge {tuple(pair)!r} has non-integer endpoints")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {(u, v)} has an endpoint outside [0, {n})")
        if u == v:
            raise GraphFormatError(f"loop edge {(u, v)} is not allowed in a simple graph")
        canonical.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canonical)), name=name,
                 labels=tuple(labels) if labels is not None else None)


def from_labeled_edges(vertices: Iterable[Hashable], pairs: Iterable[Tuple[Hashable, Hashable]],
                       name: str = "") -> Graph:
    """Remap arbitrary vertex labels to 0..n-1, keeping the label map for reporting"""
    ordered = list(dict.fromkeys(vertices))
    try:
        ordered = sorted(ordered)
    except TypeError:
        pass
    index = {label: i for i, label in enumerate(ordered)}
    try:
        dense = [(index[a], index[b]) for a, b in pairs]
    except KeyError as e:
        raise GraphFormatError(f"edge endpoint {e.args[0]!r} is not a listed vertex")
    return from_edge_list(len(ordered), dense, name=name, labels=[str(v) for v in ordered])


def contract(g: Graph, e: EdgeRef) -> Tuple[Graph, EdgeLabelMap]:
    """Contract edge e = uv (u < v) into u, renumber densely and re-simplify.

    The result has n-1 vertices and m-1-t edges, t = triangles through e.
    """
    u, v = g.check_edge(e)
    vertex_map = tuple(u if w == v else (w - 1 if w > v else w) for w in range(g.n))

    merged: Dict[Edge, List[EdgeRef]] = {}
    for f, (a, b) in enumerate(g.edges):
        if f == e:
            continue
        x, y = vertex_map[a], vertex_map[b]
        key = (x, y) if x < y else (y, x)
        merged.setdefault(key, []).append(f)

    new_edges = tuple(sorted(merged))
    labels = None
    if g.labels is not None:
        labels = tuple(
            f"{g.labels[u]}+{g.labels[v]}" if w == u else g.labels[w + (1 if w >= v else 0)]
            for w in range(g.n - 1)
        )
    contracted = Graph(g.n - 1, new_edges, name=f"{g.name}/e{e}" if g.name else "", labels=labels)
    label_map = EdgeLabelMap(
        preimages=tuple(tuple(merged[edge]) for edge in new_edges),
        vertex_map=vertex_map,
        contracted=e,
    )
    return contracted, label_map

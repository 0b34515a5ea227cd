"""Local subgraph statistics: triangles and 4-cycles through edges."""
from .core import EdgeRef, Graph


def triangles_through(g: Graph, e: EdgeRef) -> int:
    """Number of 3-cycles containing e = uv, i.e. |N(u) & N(v)|"""
    u, v = g.check_edge(e)
    return len(g.adjacency[u] & g.adjacency[v])


def triangle_count(g: Graph) -> int:
    """Total number of 3-cycles, each counted once"""
    per_edge = sum(len(g.adjacency[u] & g.adjacency[v]) for u, v in g.edges)
    return per_edge // 3


def four_cycles_through(g: Graph, e: EdgeRef) -> int:
    """Number of distinct 4-cycles u-v-x-y-u through e = uv.

    Each such cycle is fixed by the pair (x, y) with x in N(v)-{u},
    y in N(u)-{v}, x != y and xy an edge.
    """
    u, v = g.check_edge(e)
    side_u = g.adjacency[u] - {v}
    total = 0
    for x in g.adjacency[v]:
        if x == u:
            continue
        total += len(g.adjacency[x] & (side_u - {x}))
    return total


def c4(g: Graph) -> int:
    """Least r such that every edge lies on at most r 4-cycles (0 when edgeless)"""
    return max((four_cycles_through(g, e) for e in range(g.m)), default=0)

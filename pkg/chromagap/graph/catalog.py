"""Named graph families and small-graph catalogs built on networkx."""
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import networkx as nx

from ..config.exceptions import ConfigValidationError
from ..utils.validation import parse_generator_spec
from .core import Graph, from_labeled_edges


def from_networkx(nx_graph: nx.Graph, name: str = "") -> Graph:
    """Convert a networkx graph; node labels are remapped densely and kept"""
    if nx_graph.is_directed() or nx_graph.is_multigraph():
        raise ConfigValidationError("only simple undirected graphs are supported")
    pairs = [(a, b) for a, b in nx_graph.edges() if a != b]
    return from_labeled_edges(nx_graph.nodes(), pairs, name=name)


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges)
    return nx_graph


def _paw() -> nx.Graph:
    # triangle with a pendant edge
    return nx.Graph([(0, 1), (0, 2), (1, 2), (2, 3)])


_GENERATORS: Dict[str, Tuple[int, Callable[..., nx.Graph]]] = {
    "complete": (1, nx.complete_graph),
    "cycle": (1, nx.cycle_graph),
    "path": (1, nx.path_graph),
    "star": (1, nx.star_graph),
    "empty": (1, nx.empty_graph),
    "complete_bipartite": (2, nx.complete_bipartite_graph),
    "petersen": (0, nx.petersen_graph),
    "paw": (0, _paw),
    "atlas": (1, nx.graph_atlas),
}


def generate(spec: str) -> Graph:
    """Build a graph from a generator spec such as ``cycle:5`` or ``complete_bipartite:2,4``"""
    name, args = parse_generator_spec(spec)
    if name not in _GENERATORS:
        known = ", ".join(sorted(_GENERATORS))
        raise ConfigValidationError(f"Unknown generator '{name}' (known: {known})")
    arity, factory = _GENERATORS[name]
    if len(args) != arity:
        raise ConfigValidationError(f"Generator '{name}' takes {arity} argument(s), got {len(args)}")
    if name == "atlas" and not args[0] < 1253:
        raise ConfigValidationError("atlas index must be below 1253")
    nx_graph = factory(*args)
    if nx_graph.number_of_nodes() == 0:
        raise ConfigValidationError(f"Generator '{spec}' produced an empty vertex set")
    return from_networkx(nx_graph, name=spec)


def atlas_graphs(max_n: int = 7, min_n: int = 1, connected_only: bool = False,
                 min_m: int = 0, max_m: Optional[int] = None) -> Iterator[Graph]:
    """All graphs on min_n..max_n vertices (up to isomorphism) from the networkx atlas"""
    if max_n > 7:
        raise ConfigValidationError("the graph atlas only covers graphs with at most 7 vertices")
    for index, nx_graph in enumerate(nx.graph_atlas_g()):
        n = nx_graph.number_of_nodes()
        if n < max(min_n, 1) or n > max_n:
            continue
        m = nx_graph.number_of_edges()
        if m < min_m or (max_m is not None and m > max_m):
            continue
        if connected_only and not nx.is_connected(nx_graph):
            continue
        yield from_networkx(nx_graph, name=f"atlas:{index}")


def catalog(spec: str) -> List[Graph]:
    """Resolve ``connected:<max_n>`` or ``atlas:<max_n>`` into a list of graphs"""
    name, args = parse_generator_spec(spec)
    if name not in ("connected", "atlas") or len(args) != 1:
        raise ConfigValidationError(f"Unknown catalog '{spec}' (use connected:<max_n> or atlas:<max_n>)")
    return list(atlas_graphs(max_n=args[0], connected_only=(name == "connected")))


def is_chordal(g: Graph) -> bool:
    return nx.is_chordal(to_networkx(g))

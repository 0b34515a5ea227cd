import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Sequence, Tuple

from ..config.exceptions import OrderingFormatError
from ..graph.core import EdgeRef, Graph, contract
from ..utils.file_utils import read_text


class ParallelEdgeRule(str, Enum):
    """Which pre-image label a merged parallel pair keeps under contraction"""
    SMALLER = "smaller"
    LARGER = "larger"


@dataclass(frozen=True)
class EdgeOrdering:
    """Bijection eta from the canonical edges of ``graph`` onto 1..m.

    ``labels[e]`` is eta(e) for edge ref e.
    """
    graph: Graph
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.m or sorted(self.labels) != list(range(1, self.graph.m + 1)):
            raise OrderingFormatError(
                f"ordering must be a permutation of 1..{self.graph.m}, got {list(self.labels)}"
            )

    @classmethod
    def canonical(cls, g: Graph) -> "EdgeOrdering":
        return cls(g, tuple(range(1, g.m + 1)))

    @classmethod
    def random(cls, g: Graph, seed: int) -> "EdgeOrdering":
        labels = list(range(1, g.m + 1))
        random.Random(seed).shuffle(labels)
        return cls(g, tuple(labels))

    @classmethod
    def from_labels(cls, g: Graph, labels: Sequence[int]) -> "EdgeOrdering":
        return cls(g, tuple(int(label) for label in labels))

    def require_graph(self, g: Graph) -> "EdgeOrdering":
        if self.graph != g:
            raise OrderingFormatError(
                f"ordering was built for a different graph (n={self.graph.n}, m={self.graph.m}) than {g}"
            )
        return self

    def label(self, e: EdgeRef) -> int:
        self.graph.check_edge(e)
        return self.labels[e]

    @cached_property
    def by_label(self) -> Tuple[EdgeRef, ...]:
        """Edge refs sorted by increasing eta"""
        return tuple(sorted(range(self.graph.m), key=self.labels.__getitem__))

    def minimum(self, edge_set) -> EdgeRef:
        return min(edge_set, key=self.labels.__getitem__)

    def to_text(self) -> str:
        return " ".join(str(label) for label in self.labels) + "\n"


def parse_ordering(g: Graph, text: str) -> EdgeOrdering:
    """Parse m whitespace-separated labels applied to the canonical edge order"""
    tokens = text.split()
    try:
        labels = [int(token) for token in tokens]
    except ValueError:
        raise OrderingFormatError("ordering labels must be integers")
    if len(labels) != g.m:
        raise OrderingFormatError(f"expected {g.m} labels, found {len(labels)}")
    return EdgeOrdering.from_labels(g, labels)


def resolve_ordering(g: Graph, spec: str) -> EdgeOrdering:
    """Resolve an --eta value: ``canonical``, ``random:SEED`` or a file path"""
    if spec == "canonical":
        return EdgeOrdering.canonical(g)
    if spec.startswith("random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError:
            raise OrderingFormatError(f"invalid random ordering seed in '{spec}'")
        return EdgeOrdering.random(g, seed)
    path = Path(spec)
    if not path.exists():
        raise OrderingFormatError(f"ordering file '{spec}' not found")
    return parse_ordering(g, read_text(path))


def induced_ordering(g: Graph, eta: EdgeOrdering, e: EdgeRef,
                     rule: ParallelEdgeRule = ParallelEdgeRule.SMALLER) -> EdgeOrdering:
    """Contract e and restrict eta to G/e.

    Each surviving edge is represented by one pre-image label (the smaller one
    of a merged parallel pair by default); labels are then compressed to
    1..m-1-t keeping relative order. The returned ordering carries G/e as
    its graph.
    """
    contracted, label_map = contract(g, e)
    pick = min if rule == ParallelEdgeRule.SMALLER else max
    representative = [pick(eta.labels[f] for f in pre) for pre in label_map.preimages]
    rank = {label: i + 1 for i, label in enumerate(sorted(representative))}
    return EdgeOrdering(contracted, tuple(rank[label] for label in representative))

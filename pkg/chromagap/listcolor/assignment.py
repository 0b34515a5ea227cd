"""List assignments L: V -> finite sets of non-negative integer colors.

Text format, one line per vertex::

    0: 1 2 3
    1: 2 3 4
"""
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..config.exceptions import AssignmentError, AssignmentFormatError, PreconditionError
from ..graph.core import EdgeRef, Graph
from ..utils.file_utils import read_text
from ..utils.validation import parse_key_values

ColorList = Tuple[int, ...]


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex sorted color lists, optionally claimed k-uniform.

    Uniformity is checked here only when ``k`` is given; counting accepts any
    lists and the gap and bound code calls ``require_uniform``.
    """
    lists: Tuple[ColorList, ...]
    k: Optional[int] = None

    def __post_init__(self):
        normalized = []
        for v, colors in enumerate(self.lists):
            colors = tuple(sorted(set(colors)))
            if any(isinstance(c, bool) or not isinstance(c, int) or c < 0 for c in colors):
                raise AssignmentError(f"colors of vertex {v} must be non-negative integers")
            normalized.append(colors)
        object.__setattr__(self, "lists", tuple(normalized))
        if self.k is not None:
            self.require_uniform(self.k)

    @property
    def n(self) -> int:
        return len(self.lists)

    @cached_property
    def sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(colors) for colors in self.lists)

    @property
    def uniform_size(self) -> Optional[int]:
        sizes = {len(colors) for colors in self.lists}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self, k: int) -> bool:
        return all(len(colors) == k for colors in self.lists)

    def require_uniform(self, k: int) -> "ListAssignment":
        for v, colors in enumerate(self.lists):
            if len(colors) != k:
                raise AssignmentError(f"assignment is not {k}-uniform: vertex {v} has {len(colors)} colors")
        return self

    def require_graph(self, g: Graph) -> "ListAssignment":
        if self.n != g.n:
            raise AssignmentError(f"assignment covers {self.n} vertices, graph has {g.n}")
        return self

    def is_constant(self) -> bool:
        return len(set(self.lists)) <= 1

    def constant_on_edges(self, g: Graph) -> bool:
        """True iff L(u) = L(v) for every edge uv"""
        return all(self.lists[u] == self.lists[v] for u, v in g.edges)

    @property
    def colors(self) -> FrozenSet[int]:
        return frozenset().union(*self.sets) if self.lists else frozenset()

    @classmethod
    def constant(cls, n: int, k: int) -> "ListAssignment":
        """The list {1..k} on every vertex"""
        return cls(tuple(tuple(range(1, k + 1)) for _ in range(n)), k=k)

    def to_text(self) -> str:
        return "".join(f"{v}: {' '.join(str(c) for c in colors)}\n" for v, colors in enumerate(self.lists))

    def to_json(self) -> List[List[int]]:
        return [list(colors) for colors in self.lists]

    def canonical_key(self) -> Tuple[ColorList, ...]:
        """First-appearance normal form.

        Colors are renamed 1, 2, ... in order of first appearance scanning
        vertices in order (new colors of one vertex by increasing id), so two
        assignments with equal keys differ only by a renaming of colors.
        """
        rename = {}
        out = []
        for colors in self.lists:
            for c in colors:
                if c not in rename:
                    rename[c] = len(rename) + 1
            out.append(tuple(sorted(rename[c] for c in colors)))
        return tuple(out)


def parse_assignment(text: str, n: int, k: Optional[int] = None) -> ListAssignment:
    """Parse "v: c1 c2 ..." lines; every vertex 0..n-1 must appear exactly once"""
    found = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if not content:
            continue
        head, sep, tail = content.partition(':')
        if not sep:
            raise AssignmentFormatError("expected 'v: c1 c2 ...'", line=number)
        try:
            v = int(head)
            colors = tuple(int(token) for token in tail.split())
        except ValueError:
            raise AssignmentFormatError("vertex and colors must be integers", line=number)
        if not 0 <= v < n:
            raise AssignmentFormatError(f"vertex {v} out of range for n={n}", line=number)
        if v in found:
            raise AssignmentFormatError(f"vertex {v} listed twice", line=number)
        if any(c < 0 for c in colors):
            raise AssignmentFormatError("colors must be non-negative", line=number)
        if len(set(colors)) != len(colors):
            raise AssignmentFormatError(f"duplicate color in the list of vertex {v}", line=number)
        found[v] = colors

    missing = [v for v in range(n) if v not in found]
    if missing:
        raise AssignmentFormatError(f"no list given for vertex {missing[0]}")
    la = ListAssignment(tuple(found[v] for v in range(n)))
    if k is not None and not la.is_uniform(k):
        raise AssignmentFormatError(f"lists are not all of size {k}")
    return la


def read_assignment(path: Path, n: int, k: Optional[int] = None) -> ListAssignment:
    return parse_assignment(read_text(path), n, k)


def random_assignment(n: int, k: int, universe: int, seed: int) -> ListAssignment:
    """Each vertex gets an independent uniform k-subset of {1..universe}"""
    if k < 0 or universe < k:
        raise AssignmentError(f"cannot draw {k} colors from a universe of {universe}")
    rng = random.Random(seed)
    return ListAssignment(tuple(tuple(rng.sample(range(1, universe + 1), k)) for _ in range(n)), k=k)


def random_assignment_from_spec(n: int, spec: str) -> ListAssignment:
    """Build the assignment of a ``k=<k>,universe=<U>,seed=<S>`` option string"""
    values = parse_key_values(spec, required=("k",), optional=("universe", "seed"))
    k = values["k"]
    return random_assignment(n, k, values.get("universe", 2 * k), values.get("seed", 0))


def alpha(la: ListAssignment, g: Graph, e: EdgeRef) -> int:
    """|L(u) \\ L(v)| for e = uv"""
    u, v = g.check_edge(e)
    return len(la.sets[u] - la.sets[v])


def beta(la: ListAssignment, vertices: Iterable[int]) -> int:
    """Size of the intersection of L(v) over ``vertices``"""
    sets = sorted((la.sets[v] for v in vertices), key=len)
    if not sets:
        raise PreconditionError("beta needs a nonempty vertex set")
    common = sets[0]
    for s in sets[1:]:
        if not common:
            break
        common = common & s
    return len(common)


def iter_all_assignments(n: int, k: int, universe: int) -> Iterator[ListAssignment]:
    """Every k-assignment over {1..universe}; C(universe, k)^n of them"""
    subsets = list(combinations(range(1, universe + 1), k))

    def extend(prefix: List[ColorList]):
        if len(prefix) == n:
            yield ListAssignment(tuple(prefix))
            return
        for subset in subsets:
            prefix.append(subset)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def iter_canonical_assignments(n: int, k: int, universe: int) -> Iterator[ListAssignment]:
    """k-assignments over {1..universe} in first-appearance normal form.

    Every k-assignment is a renaming of at least one of these. Each vertex
    takes a subset of the colors already used plus the next unused ids.
    """
    def extend(prefix: List[ColorList], used: int):
        if len(prefix) == n:
            yield ListAssignment(tuple(prefix))
            return
        for reused in range(min(k, used), -1, -1):
            fresh = k - reused
            if used + fresh > universe:
                continue
            new_colors = tuple(range(used + 1, used + fresh + 1))
            for subset in combinations(range(1, used + 1), reused):
                prefix.append(subset + new_colors)
                yield from extend(prefix, used + fresh)
                prefix.pop()

    yield from extend([], 0)


def count_canonical_assignments(n: int, k: int, universe: int) -> int:
    """Number of assignments ``iter_canonical_assignments`` yields"""
    ways = {0: 1}
    for _ in range(n):
        step = {}
        for used, count in ways.items():
            for reused in range(min(k, used) + 1):
                fresh = k - reused
                if used + fresh > universe:
                    continue
                step[used + fresh] = step.get(used + fresh, 0) + count * comb(used, reused)
        ways = step
    return sum(ways.values())


def count_all_assignments(n: int, k: int, universe: int) -> int:
    return comb(universe, k) ** n


def assignments_equivalent(a: Sequence[ColorList], b: Sequence[ColorList]) -> bool:
    """Whether b is a color renaming of a.

    A color is pinned down by the set of vertices whose lists contain it, so a
    renaming exists iff both sides have the same multiset of such sets.
    """
    if len(a) != len(b):
        return False

    def signature(lists: Sequence[ColorList]):
        where = {}
        for v, colors in enumerate(lists):
            for c in colors:
                where.setdefault(c, []).append(v)
        return sorted(tuple(vs) for vs in where.values())

    return signature(a) == signature(b)

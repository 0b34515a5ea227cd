"""Per-forest bounds on prod_j beta(T_j) - k^(n-i) and the scalar product inequality."""
import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..graph.core import Graph
from ..listcolor.assignment import ListAssignment, alpha
from ..listcolor.counting import forest_weight
from ..nbc.enumeration import NbcForest, nbc_forests
from ..nbc.ordering import EdgeOrdering


def sample_forests(g: Graph, eta: EdgeOrdering, i: int, cap: int, seed: int) -> Tuple[List[NbcForest], int]:
    """Uniform reservoir sample of at most ``cap`` forests of size i, and the class size"""
    rng = random.Random(seed * 1009 + i)
    sample: List[NbcForest] = []
    seen = 0
    for forest in nbc_forests(g, eta, i):
        seen += 1
        if len(sample) < cap:
            sample.append(forest)
        else:
            slot = rng.randrange(seen)
            if slot < cap:
                sample[slot] = forest
    return sample, seen


def forest_deficit(g: Graph, la: ListAssignment, k: int, forest: NbcForest) -> int:
    """prod_j beta(T_j) - k^(n-i)"""
    return forest_weight(la, forest) - k ** (g.n - forest.size)


def forest_alpha_sum(g: Graph, la: ListAssignment, forest: NbcForest) -> int:
    return sum(alpha(la, g, f) for f in forest.edges)


def lemma41_bound(g: Graph, k: int, forest: NbcForest, alpha_sum: int) -> int:
    """-k^(n-i-1) sum_{e in F} alpha(e); the deficit is at least this"""
    return -(k ** (g.n - forest.size - 1)) * alpha_sum


def lemma43_bound(g: Graph, k: int, forest: NbcForest, alpha_sum: int) -> Fraction:
    """-(k^(n-i-1) / i) sum_{e in F} alpha(e); the deficit is at most this (i >= 1)"""
    return Fraction(-(k ** (g.n - forest.size - 1)) * alpha_sum, forest.size)


def lemma42_sides(x: Fraction, ds: Sequence[Fraction], qs: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    """(prod (x - d_i), x^r - x^(r-1) sum q_i d_i / sum q_i)"""
    r = len(ds)
    product = Fraction(1)
    for d in ds:
        product *= x - d
    weighted = sum((q * d for q, d in zip(qs, ds)), Fraction(0)) / sum(qs, Fraction(0))
    return product, x ** r - x ** (r - 1) * weighted


def random_lemma42_instance(rng: random.Random, max_r: int = 6,
                            max_numerator: int = 20) -> Tuple[Fraction, List[Fraction], List[Fraction]]:
    """Non-negative rational d_i, positive rational q_i and some x >= max d_i"""
    r = rng.randint(1, max_r)
    ds = [Fraction(rng.randint(0, max_numerator), rng.randint(1, 6)) for _ in range(r)]
    qs = [Fraction(rng.randint(1, max_numerator), rng.randint(1, 6)) for _ in range(r)]
    x = max(ds) + Fraction(rng.randint(0, max_numerator), rng.randint(1, 6))
    return x, ds, qs

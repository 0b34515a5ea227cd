from itertools import combinations

import pytest

from chromagap.chromatic import chromatic_deletion_contraction
from chromagap.config.exceptions import InvalidEdgeError, OrderingFormatError, PreconditionError
from chromagap.graph import contract, from_edge_list, generate
from chromagap.nbc import (
    EdgeOrdering,
    ParallelEdgeRule,
    broken_cycles,
    chromatic_via_whitney,
    induced_ordering,
    is_nbc,
    is_nbc_definitional,
    iter_nbc_forests,
    nbc_forests,
    nbc_profile,
    parse_ordering,
    resolve_ordering,
)


def orderings(g, seeds=(1, 2, 3)):
    yield EdgeOrdering.canonical(g)
    for seed in seeds:
        yield EdgeOrdering.random(g, seed)


class TestEdgeOrdering:

    def test_rejects_non_permutation(self, k3):
        with pytest.raises(OrderingFormatError):
            EdgeOrdering.from_labels(k3, [1, 1, 2])
        with pytest.raises(OrderingFormatError):
            EdgeOrdering.from_labels(k3, [1, 2])

    def test_by_label(self, k3):
        eta = EdgeOrdering.from_labels(k3, [3, 1, 2])
        assert eta.by_label == (1, 2, 0)
        assert eta.minimum({0, 2}) == 2

    def test_parse_ordering(self, k3):
        assert parse_ordering(k3, "2 3 1\n").labels == (2, 3, 1)
        with pytest.raises(OrderingFormatError):
            parse_ordering(k3, "1 2")
        with pytest.raises(OrderingFormatError):
            parse_ordering(k3, "1 two 3")

    def test_resolve_specs(self, k3, write_file):
        assert resolve_ordering(k3, "canonical").labels == (1, 2, 3)
        assert resolve_ordering(k3, "random:4") == EdgeOrdering.random(k3, 4)
        path = write_file("k3.eta", "3 2 1\n")
        assert resolve_ordering(k3, str(path)).labels == (3, 2, 1)
        with pytest.raises(OrderingFormatError):
            resolve_ordering(k3, "random:x")
        with pytest.raises(OrderingFormatError):
            resolve_ordering(k3, "missing.eta")

    def test_random_is_seeded(self, k4):
        assert EdgeOrdering.random(k4, 9) == EdgeOrdering.random(k4, 9)

    def test_require_graph(self, paw, c4):
        eta = EdgeOrdering.canonical(c4)
        assert eta.require_graph(generate("cycle:4")) is eta
        with pytest.raises(OrderingFormatError):
            eta.require_graph(paw)
        with pytest.raises(OrderingFormatError):
            nbc_profile(paw, eta)
        with pytest.raises(OrderingFormatError):
            is_nbc(paw, eta, [0])


class TestInducedOrdering:

    def test_k3_keeps_smaller_label(self, k3):
        induced = induced_ordering(k3, EdgeOrdering.canonical(k3), 0)
        assert induced.graph.m == 1
        assert induced.labels == (1,)

    def test_path_keeps_relative_order(self):
        p4 = generate("path:4")
        eta = EdgeOrdering.from_labels(p4, [3, 1, 2])
        induced = induced_ordering(p4, eta, 1)
        # surviving edges carried labels 3 and 2
        assert induced.labels == (2, 1)

    def test_parallel_rule_changes_labels(self, k4):
        eta = EdgeOrdering.from_labels(k4, [5, 1, 2, 6, 3, 4])
        smaller = induced_ordering(k4, eta, 0, ParallelEdgeRule.SMALLER)
        larger = induced_ordering(k4, eta, 0, ParallelEdgeRule.LARGER)
        # merged pairs carry labels {1, 6} and {2, 3}; the single edge keeps 4
        assert smaller.labels == (1, 2, 3)
        assert larger.labels == (3, 1, 2)
        assert smaller.graph == contract(k4, 0)[0]

    def test_contracted_totals_do_not_depend_on_rule(self, small_connected):
        for g in small_connected:
            eta = EdgeOrdering.random(g, g.m)
            for e in range(g.m):
                a = induced_ordering(g, eta, e, ParallelEdgeRule.SMALLER)
                b = induced_ordering(g, eta, e, ParallelEdgeRule.LARGER)
                assert nbc_profile(a.graph, a).counts_total == nbc_profile(b.graph, b).counts_total


class TestBrokenCycles:

    def test_k3(self, k3):
        eta = EdgeOrdering.from_labels(k3, [2, 3, 1])
        # the minimum label sits on edge 2, the other two form the broken cycle
        assert broken_cycles(k3, eta) == [frozenset({0, 1})]

    def test_forest_has_none(self):
        assert broken_cycles(generate("star:4"), EdgeOrdering.canonical(generate("star:4"))) == []

    def test_k4_count(self, k4):
        found = broken_cycles(k4, EdgeOrdering.canonical(k4))
        # 4 triangles and 3 four-cycles
        assert len(found) == 7
        assert all(len(s) in (2, 3) for s in found)


class TestIsNbc:

    def test_examples(self, k3):
        eta = EdgeOrdering.canonical(k3)
        assert is_nbc(k3, eta, [])
        assert not is_nbc(k3, eta, [1, 2])
        assert is_nbc(k3, eta, [0, 1])
        assert not is_nbc(k3, eta, [0, 1, 2])

    def test_bad_edge(self, k3):
        with pytest.raises(InvalidEdgeError):
            is_nbc(k3, EdgeOrdering.canonical(k3), [3])

    def test_sweep_matches_definition(self, small_connected):
        for g in small_connected:
            if g.m > 8:
                continue
            for eta in orderings(g, seeds=(5,)):
                for size in range(g.m + 1):
                    for subset in combinations(range(g.m), size):
                        assert is_nbc(g, eta, subset) == is_nbc_definitional(g, eta, subset)


class TestProfile:

    def test_k3(self, k3):
        profile = nbc_profile(k3, EdgeOrdering.canonical(k3))
        assert profile.counts_total == (1, 3, 2)
        assert profile.counts_per_edge == ((0, 1, 2), (0, 1, 1), (0, 1, 1))
        assert all(row[2] in (1, 2) for row in profile.counts_per_edge)

    def test_edgeless(self):
        g = from_edge_list(3, [])
        assert nbc_profile(g, EdgeOrdering.canonical(g)).counts_total == (1, 0, 0)

    def test_totals_independent_of_ordering(self, small_connected):
        for g in small_connected:
            totals = {nbc_profile(g, eta).counts_total for eta in orderings(g)}
            assert len(totals) == 1

    def test_per_edge_sums(self, small_connected):
        for g in small_connected:
            profile = nbc_profile(g, EdgeOrdering.random(g, 7))
            for i in range(1, g.n):
                assert sum(profile.per_edge(e, i) for e in range(g.m)) == i * profile.total(i)


class TestForests:

    def test_sizes(self, c4):
        eta = EdgeOrdering.canonical(c4)
        assert [f.components for f in nbc_forests(c4, eta, 0)] == [((0,), (1,), (2,), (3,))]
        assert len(list(nbc_forests(c4, eta, 1))) == 4
        assert len(list(nbc_forests(c4, eta, 3))) == 3

    def test_components_match_size(self, small_connected):
        for g in small_connected:
            eta = EdgeOrdering.random(g, 3)
            profile = nbc_profile(g, eta)
            for i in range(g.n):
                forests = list(nbc_forests(g, eta, i))
                assert len(forests) == profile.total(i)
                assert all(len(f.components) == g.n - i for f in forests)

    def test_component_edges(self, paw):
        eta = EdgeOrdering.canonical(paw)
        for forest in iter_nbc_forests(paw, eta):
            grouped = forest.component_edges(paw)
            assert sorted(f for group in grouped for f in group) == list(forest.edges)
            for group, tree in zip(grouped, forest.components):
                assert len(group) == len(tree) - 1

    def test_size_out_of_range(self, k3):
        with pytest.raises(PreconditionError):
            list(nbc_forests(k3, EdgeOrdering.canonical(k3), 3))


class TestWhitney:

    def test_known_polynomials(self, k3, c4, p3):
        assert str(chromatic_via_whitney(k3, EdgeOrdering.canonical(k3))) == "x^3 - 3x^2 + 2x"
        assert str(chromatic_via_whitney(c4, EdgeOrdering.canonical(c4))) == "x^4 - 4x^3 + 6x^2 - 3x"
        assert str(chromatic_via_whitney(p3, EdgeOrdering.canonical(p3))) == "x^3 - 2x^2 + x"

    def test_agrees_with_deletion_contraction(self, small_connected):
        for g in small_connected:
            expected = chromatic_deletion_contraction(g)
            for eta in orderings(g):
                assert chromatic_via_whitney(g, eta) == expected

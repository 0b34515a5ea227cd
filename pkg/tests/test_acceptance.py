"""Exhaustive sweeps over the small-graph atlas; run with ``python run_tests.py slow``"""
import random

import pytest

from chromagap.bounds import (
    VerifySettings,
    lemma42_sides,
    random_lemma42_instance,
    verify_all,
    verify_corollary_1_2,
    verify_theorem_1_1,
)
from chromagap.chromatic import chromatic_deletion_contraction, count_proper_colorings
from chromagap.graph import atlas_graphs, generate, is_chordal
from chromagap.listcolor import (
    count_canonical_assignments,
    count_list_colorings,
    count_list_colorings_nbc,
    random_assignment,
)
from chromagap.models.report import Verdict
from chromagap.nbc import EdgeOrdering, chromatic_via_whitney
from chromagap.search import exact_pl

pytestmark = pytest.mark.slow

CHORDAL_SWEEP_CAP = 2 * 10 ** 5


@pytest.fixture(scope="module")
def connected_upto_6():
    return list(atlas_graphs(max_n=6, min_n=1, connected_only=True))


class TestAcceptanceSweeps:

    def test_oracle_triangulation(self, connected_upto_6):
        for g in connected_upto_6:
            contraction = chromatic_deletion_contraction(g)
            for seed in range(3):
                assert chromatic_via_whitney(g, EdgeOrdering.random(g, seed)) == contraction
            for k in range(4):
                assert contraction.evaluate(k) == count_proper_colorings(g, k)

    def test_list_count_cross_check(self, connected_upto_6):
        rng = random.Random(500)
        for _ in range(500):
            g = rng.choice(connected_upto_6)
            k = rng.randint(2, 4)
            la = random_assignment(g.n, k, 2 * k, rng.randrange(10 ** 9))
            expected = count_list_colorings(g, la)
            values = {count_list_colorings_nbc(g, EdgeOrdering.random(g, rng.randrange(10 ** 9)), la)
                      for _ in range(3)}
            assert values == {expected}

    def test_theorem_sweep(self):
        graphs = list(atlas_graphs(max_n=7, min_n=2, connected_only=True, min_m=4, max_m=7))
        for g in graphs:
            eta = EdgeOrdering.canonical(g)
            for k in (g.m - 1, g.m):
                for seed in range(200):
                    la = random_assignment(g.n, k, 2 * k, seed)
                    for record in verify_theorem_1_1(g, eta, la, k):
                        assert record.verdict != Verdict.VIOLATED, (g, record.witness)

    @pytest.mark.parametrize("spec", ["path:3", "complete:3", "path:4", "star:3", "cycle:4", "paw"])
    def test_corollary_exhaustive(self, spec):
        g = generate(spec)
        k = max(g.m - 1, 2)
        record = verify_corollary_1_2(g, k, k + 2)
        assert record.verdict == Verdict.HOLDS, record.witness

    def test_graph_level_chain(self, connected_upto_6):
        settings = VerifySettings(lemma42_samples=50)
        for g in connected_upto_6:
            report = verify_all(g, EdgeOrdering.canonical(g), settings=settings)
            assert not report.has_violations, (g, report.summary())

    def test_forest_lemmas_on_random_instances(self, connected_upto_6):
        rng = random.Random(4100)
        settings = VerifySettings(lemma42_samples=0)
        with_edges = [g for g in connected_upto_6 if g.m >= 1]
        for _ in range(100):
            g = rng.choice(with_edges)
            k = rng.randint(2, 4)
            la = random_assignment(g.n, k, 2 * k, rng.randrange(10 ** 9))
            eta = EdgeOrdering.random(g, rng.randrange(10 ** 9))
            report = verify_all(g, eta, la, k, settings=settings)
            for record_id in ("lem4.1", "lem4.3"):
                record = report.get(record_id)
                assert record.verdict == Verdict.HOLDS, (g, la, record.witness)
                assert record.instances > 0

    def test_lemma42_random_tuples(self):
        rng = random.Random(42)
        for _ in range(10 ** 4):
            x, ds, qs = random_lemma42_instance(rng, max_r=6)
            product, bound = lemma42_sides(x, ds, qs)
            assert bound >= product, (x, ds, qs)

    def test_chordal_list_function(self):
        """P_l(G, k) = P(G, k) on chordal graphs, over universe n*k where the canonical enumeration fits"""
        chordal = [g for g in atlas_graphs(max_n=5, min_n=2, connected_only=True) if is_chordal(g)]
        for g in chordal:
            for k in range(2, 5):
                universe = g.n * k
                if count_canonical_assignments(g.n, k, universe) > CHORDAL_SWEEP_CAP:
                    universe = k + 2
                result = exact_pl(g, k, universe, budget=CHORDAL_SWEEP_CAP)
                assert result.best_value == result.p_gk, (g, k, universe, result.best_assignment)

    def test_complete_bipartite_not_two_choosable(self):
        g = generate("complete_bipartite:2,4")
        result = exact_pl(g, 2, 4)
        assert result.best_value == 0
        assert result.p_gk == 2

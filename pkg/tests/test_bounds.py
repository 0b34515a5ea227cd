import random
from fractions import Fraction

import pytest

from chromagap.bounds import (
    RadicalBound,
    Tightest,
    VerifySettings,
    fisher_bound,
    four_cycle_chain_holds,
    gap_lower_lemma44,
    k3free_closed_form,
    lemma42_sides,
    maxdeg_triangle_bound,
    nbc2_closed_form,
    nbc2_lower_general,
    nbc2_lower_k3free,
    q_lower_theorem35,
    random_lemma42_instance,
    theorem35_bound,
    verify_all,
    verify_corollary_1_2,
    verify_theorem_1_1,
)
from chromagap.config.exceptions import BudgetExceededError, NotApplicableError, PreconditionError
from chromagap.graph import triangle_count
from chromagap.listcolor import ListAssignment, count_canonical_assignments, gap
from chromagap.models.report import CProvenance, Verdict
from chromagap.nbc import EdgeOrdering, nbc_profile

GRAPH_ITEMS = (
    "eq5", "lem2.2", "lem2.4", "thm2.3", "thm2.3-even", "cor2.5", "cor2.5-mid", "fisher",
    "lem3.3", "lem3.1", "lem3.4", "thm3.5", "thm3.5-k3free", "lem4.2",
)
LIST_ITEMS = ("lem4.1", "lem4.3", "lem4.4", "eq7", "thm1.1", "thm1.1-k3free")


class TestRadicalBound:

    def test_fisher_is_tight_on_cliques(self, k3, k4):
        for g in (k3, k4):
            bound = fisher_bound(g.m)
            assert bound.exact() == triangle_count(g)
            assert bound.compare(triangle_count(g)) == 0

    def test_compare_irrational(self):
        root2 = RadicalBound(0, 1, 2)
        assert root2.compare(1) == 1
        assert root2.compare(2) == -1
        assert root2 >= Fraction(7, 5)
        assert root2 <= Fraction(3, 2)
        assert RadicalBound(1, -1, 2).compare(0) == -1
        assert RadicalBound(3, 0, 5).compare(3) == 0

    def test_exact_needs_square(self):
        with pytest.raises(ValueError):
            RadicalBound(0, 1, 2).exact()
        with pytest.raises(ValueError):
            RadicalBound(0, 1, -1)

    def test_str(self):
        assert str(RadicalBound(0, 1, 2)) == "sqrt(2)"
        assert str(fisher_bound(3)) == "1"

    def test_maxdeg_bound_range(self):
        assert maxdeg_triangle_bound(3, 0) == RadicalBound(Fraction(3, 2), Fraction(1, 2), 25)
        with pytest.raises(ValueError):
            maxdeg_triangle_bound(3, 4)

    def test_k3free_closed_form(self):
        # C(2,2) - 3 + 2 sqrt(4)
        assert k3free_closed_form(4).exact() == 2

    def test_four_cycle_chain(self):
        assert four_cycle_chain_holds(4, 1)
        assert not four_cycle_chain_holds(4, 2)
        assert four_cycle_chain_holds(9, 3)


class TestNbc2:

    def test_closed_form_matches_profile(self, small_connected):
        for g in small_connected:
            assert nbc2_closed_form(g) == nbc_profile(g, EdgeOrdering.canonical(g)).total(2)

    def test_k4(self, k4):
        assert nbc2_closed_form(k4) == 11

    def test_general_lower(self):
        assert nbc2_lower_general(4) == Fraction(3, 8)
        assert nbc2_lower_general(7) == 3
        with pytest.raises(NotApplicableError):
            nbc2_lower_general(3)

    def test_k3free_lower(self, c4, k3, p3):
        bound = nbc2_lower_k3free(c4)
        assert bound.exact == 2
        assert bound.display == pytest.approx(2.0)
        with pytest.raises(NotApplicableError):
            nbc2_lower_k3free(k3)
        with pytest.raises(NotApplicableError):
            nbc2_lower_k3free(p3)


class TestQBounds:

    def test_theorem35_bound_value(self):
        assert theorem35_bound(4, 3, 3) == 2
        assert theorem35_bound(3, 2, 3) == 1

    def test_q_lower_holds(self, c4):
        eta = EdgeOrdering.canonical(c4)
        c = nbc2_lower_general(c4.m)
        for e in range(c4.m):
            assert q_lower_theorem35(c4, eta, e, 3, c) == Verdict.HOLDS
            assert q_lower_theorem35(c4, eta, e, 9, c) == Verdict.HOLDS

    def test_q_lower_not_applicable(self, c4, k3):
        assert q_lower_theorem35(c4, EdgeOrdering.canonical(c4), 0, 2, 1) == Verdict.NOT_APPLICABLE
        assert q_lower_theorem35(k3, EdgeOrdering.canonical(k3), 0, 5, 1) == Verdict.NOT_APPLICABLE


class TestLemma42:

    def test_known_instance(self):
        product, bound = lemma42_sides(Fraction(4), [Fraction(1), Fraction(3)], [Fraction(1), Fraction(1)])
        assert product == 3
        assert bound == 8
        assert bound >= product

    def test_random_instances(self):
        rng = random.Random(5)
        for _ in range(300):
            x, ds, qs = random_lemma42_instance(rng)
            assert x >= max(ds)
            product, bound = lemma42_sides(x, ds, qs)
            assert bound >= product


class TestTightest:

    def test_keeps_tightest(self):
        check = Tightest("demo")
        check.add(5, 1, at="loose")
        check.add(3, 3, at="tight")
        record = check.record()
        assert record.verdict == Verdict.HOLDS
        assert record.instances == 2
        assert record.witness == {"at": "tight"}

    def test_violation_wins(self):
        check = Tightest("demo")
        check.add(1, 2, at="first")
        check.add(0, 5, at="worse")
        record = check.record()
        assert record.verdict == Verdict.VIOLATED
        assert record.witness == {"at": "first"}
        assert (record.lhs, record.rhs) == ("1", "2")

    def test_equality(self):
        check = Tightest("demo")
        assert check.add_equal(Fraction(1, 2), Fraction(2, 4))
        assert not check.add_equal(1, 2)
        assert check.violated

    def test_radical_sides(self):
        check = Tightest("demo")
        assert check.add_radical(fisher_bound(6), 4)
        assert check.add_radical(2, RadicalBound(0, 1, 2))
        assert not check.add_radical(1, RadicalBound(0, 1, 2))

    def test_empty(self):
        record = Tightest("demo").record(empty_reason="nothing here")
        assert record.verdict == Verdict.NOT_APPLICABLE
        assert record.preconditions.failed == ["nothing here"]


class TestGapBounds:

    def test_lemma44_below_gap(self, small_connected, random_lists):
        for index, g in enumerate(small_connected):
            la = random_lists(g, 3, seed=index)
            eta = EdgeOrdering.random(g, index)
            assert gap(g, la, 3) >= gap_lower_lemma44(g, eta, la, 3)

    def test_lemma44_needs_two_colors(self, k3):
        with pytest.raises(PreconditionError):
            gap_lower_lemma44(k3, EdgeOrdering.canonical(k3), ListAssignment.constant(3, 1), 1)

    def test_theorem_on_c4(self, c4, random_lists):
        eta = EdgeOrdering.canonical(c4)
        for seed in range(5):
            general, k3free = verify_theorem_1_1(c4, eta, random_lists(c4, 3, seed=seed, universe=5), 3)
            assert general.verdict == Verdict.HOLDS
            assert general.c_used == "3/8"
            assert general.c_provenance == CProvenance.GENERAL
            assert k3free.verdict == Verdict.HOLDS
            assert k3free.c_used == "2"
            assert k3free.c_provenance == CProvenance.K3FREE_EXACT
            assert k3free.witness["exact_c_dominates_closed_form"]

    def test_theorem_constant_lists(self, c4):
        general, _ = verify_theorem_1_1(c4, EdgeOrdering.canonical(c4), ListAssignment.constant(4, 3), 3)
        assert general.verdict == Verdict.HOLDS
        assert general.witness["gap"] == 0
        assert general.instances == 2

    def test_theorem_preconditions(self, k3, c4, k4):
        records = verify_theorem_1_1(k3, EdgeOrdering.canonical(k3), ListAssignment.constant(3, 3), 3)
        assert [r.verdict for r in records] == [Verdict.NOT_APPLICABLE] * 2
        records = verify_theorem_1_1(c4, EdgeOrdering.canonical(c4), ListAssignment.constant(4, 2), 2)
        assert all(r.verdict == Verdict.NOT_APPLICABLE for r in records)
        general, k3free = verify_theorem_1_1(k4, EdgeOrdering.canonical(k4), ListAssignment.constant(4, 5), 5)
        assert general.verdict == Verdict.HOLDS
        assert k3free.preconditions.failed == ["graph has a triangle"]


class TestCorollary:

    @pytest.mark.parametrize("fixture", ["p3", "k3"])
    def test_holds_with_two_colors(self, fixture, request):
        g = request.getfixturevalue(fixture)
        record = verify_corollary_1_2(g, 2, 4)
        assert record.verdict == Verdict.HOLDS
        assert record.instances == count_canonical_assignments(g.n, 2, 4)
        assert record.witness["assignments_covered"] == 216
        assert record.witness["edge_constant_assignments"] == 1
        assert int(record.lhs) > 0

    def test_not_applicable(self, k4, p3):
        assert verify_corollary_1_2(k4, 2, 4).verdict == Verdict.NOT_APPLICABLE
        assert verify_corollary_1_2(p3, 1, 4).verdict == Verdict.NOT_APPLICABLE
        assert verify_corollary_1_2(p3, 3, 2).verdict == Verdict.NOT_APPLICABLE

    def test_budget(self, p3):
        with pytest.raises(BudgetExceededError) as info:
            verify_corollary_1_2(p3, 2, 4, budget=1)
        assert info.value.required == count_canonical_assignments(3, 2, 4)


class TestVerifyAll:

    def test_records_present(self, c4, random_lists):
        report = verify_all(c4, EdgeOrdering.canonical(c4), random_lists(c4, 3, seed=1), 3)
        assert [r.id for r in report.records] == list(GRAPH_ITEMS + LIST_ITEMS)
        assert report.get("cor2.5-mid").verdict == Verdict.NOT_APPLICABLE
        assert report.get("thm2.3-even").verdict == Verdict.HOLDS
        assert report.get("lem3.1").witness["c4"] == 1
        assert report.get("lem4.2").instances == 200
        assert not report.has_violations

    def test_without_lists(self, k4):
        report = verify_all(k4, EdgeOrdering.canonical(k4))
        for record_id in LIST_ITEMS:
            record = report.get(record_id)
            assert record.verdict == Verdict.NOT_APPLICABLE
            assert record.preconditions.failed == ["no list assignment given"]
        assert report.get("lem3.1").preconditions.failed == ["graph has a triangle"]
        assert report.get("fisher").verdict == Verdict.HOLDS

    def test_wrong_assignment(self, k3):
        report = verify_all(k3, EdgeOrdering.canonical(k3), ListAssignment.constant(3, 2), 3)
        assert report.get("eq7").preconditions.failed == ["assignment is not 3-uniform"]

    def test_settings(self, k3):
        settings = VerifySettings(lemma42_samples=0)
        report = verify_all(k3, EdgeOrdering.canonical(k3), settings=settings)
        assert report.get("lem4.2").verdict == Verdict.NOT_APPLICABLE
        assert report.get("lem3.4").verdict == Verdict.NOT_APPLICABLE

    def test_json_shape(self, k3):
        data = verify_all(k3, EdgeOrdering.canonical(k3)).to_json_dict()
        assert list(data)[0] == "schema"
        assert data["schema"] == "1"
        assert data["graph"]["graph6"] == "Bw"
        assert sum(data["summary"].values()) == len(data["records"])

    def test_no_violations_on_small_graphs(self, small_connected, random_lists):
        for index, g in enumerate(small_connected):
            k = max(g.m - 1, 2)
            report = verify_all(g, EdgeOrdering.random(g, index), random_lists(g, k, seed=index), k,
                                VerifySettings(lemma42_samples=20))
            assert not report.has_violations, report.summary()
            if g.m >= 4:
                assert report.get("thm1.1").verdict == Verdict.HOLDS

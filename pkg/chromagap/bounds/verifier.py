"""Runs every inequality of the gap-bound chain on one instance and collects the verdicts."""
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from ..chromatic.qpoly import q_eval
from ..graph.core import Graph
from ..graph.formats import to_graph6
from ..graph.stats import c4, four_cycles_through, triangle_count, triangles_through
from ..listcolor.assignment import ListAssignment
from ..listcolor.counting import DEFAULT_LIST_BUDGET, gap_details, gap_expansion
from ..models.config import ConfigModel
from ..models.report import BoundRecord, BoundReport, CProvenance, GraphInfo
from ..nbc.enumeration import NbcProfile, nbc_profile
from ..nbc.ordering import EdgeOrdering, induced_ordering
from ..utils.logging import get_logger
from .forests import (
    forest_alpha_sum,
    forest_deficit,
    lemma41_bound,
    lemma42_sides,
    lemma43_bound,
    random_lemma42_instance,
    sample_forests,
)
from .nbc2 import nbc2_closed_form, nbc2_lower_general
from .qbounds import (
    corollary25_bound,
    corollary25_middle,
    theorem23_bound,
    theorem23_even_bound,
    theorem35_bound,
)
from .radicals import fisher_bound, four_cycle_chain_holds, k3free_closed_form, maxdeg_triangle_bound
from .records import Tightest
from .theorem import gap_lower_lemma44, verify_theorem_1_1

logger = get_logger("chromagap.bounds.verifier")


@dataclass(frozen=True)
class VerifySettings:
    x_offsets: Tuple[int, ...] = (-1, 0, 5)
    forest_sample_cap: int = 10 ** 4
    lemma42_samples: int = 200
    seed: int = 0
    list_budget: int = DEFAULT_LIST_BUDGET

    @classmethod
    def from_config(cls, config: ConfigModel) -> "VerifySettings":
        return cls(
            x_offsets=tuple(config.verify.x_offsets),
            forest_sample_cap=config.budgets.forest_sample_cap,
            lemma42_samples=config.verify.lemma42_samples,
            seed=config.verify.seed,
            list_budget=config.budgets.list_coloring_leaves,
        )


@dataclass(frozen=True)
class _Contraction:
    eta: EdgeOrdering
    profile: NbcProfile

    @property
    def graph(self) -> Graph:
        return self.eta.graph


def graph_info(g: Graph) -> GraphInfo:
    return GraphInfo(name=g.name, n=g.n, m=g.m, graph6=to_graph6(g), edges=[list(e) for e in g.edges])


class _Verifier:
    def __init__(self, g: Graph, eta: EdgeOrdering, settings: VerifySettings):
        self.g = g
        self.eta = eta
        self.settings = settings
        self.n, self.m = g.n, g.m
        self.profile = nbc_profile(g, eta)
        contractions = []
        for e in range(g.m):
            induced = induced_ordering(g, eta, e)
            contractions.append(_Contraction(induced, nbc_profile(induced.graph, induced)))
        self.contractions: List[_Contraction] = contractions
        self.xs = sorted({g.m + offset for offset in settings.x_offsets})
        self.triangle_free = triangle_count(g) == 0

    def q(self, e: int, x) -> Fraction:
        return q_eval(self.g, self.eta, e, x, self.profile)

    def nbc2_contracted(self, e: int) -> int:
        return self.contractions[e].profile.total(2)

    def eq5(self) -> BoundRecord:
        check = Tightest("eq5")
        check.add_equal(nbc2_closed_form(self.g), self.profile.total(2), graph="G")
        for e, contraction in enumerate(self.contractions):
            check.add_equal(nbc2_closed_form(contraction.graph), contraction.profile.total(2), graph="G/e", edge=e)
        return check.record()

    def lemma22(self) -> BoundRecord:
        check = Tightest("lem2.2")
        for e in range(self.m):
            for i in range(1, self.n - 1):
                check.add((self.m - i) * self.profile.per_edge(e, i), i * self.profile.per_edge(e, i + 1),
                          edge=e, i=i)
        return check.record(empty_reason="n >= 3 and m >= 1 required")

    def lemma24(self) -> BoundRecord:
        check = Tightest("lem2.4")
        for e, contraction in enumerate(self.contractions):
            for i in range(1, self.n):
                check.add(self.profile.per_edge(e, i), contraction.profile.total(i - 1), edge=e, i=i)
        return check.record(empty_reason="graph has no edges")

    def theorem23(self) -> List[BoundRecord]:
        if self.n < 3:
            return [BoundRecord.not_applicable("thm2.3", f"n >= 3 required, got n={self.n}"),
                    BoundRecord.not_applicable("thm2.3-even", f"n >= 3 required, got n={self.n}")]
        plain, even = Tightest("thm2.3"), Tightest("thm2.3-even")
        for e in range(self.m):
            for x in self.xs:
                if x < 0:
                    continue
                value = self.q(e, x)
                plain.add(value, theorem23_bound(self.profile, self.n, self.m, e, x), edge=e, x=x)
                if self.n % 2 == 0:
                    even.add(value, theorem23_even_bound(self.profile, self.n, self.m, e, x), edge=e, x=x)
        records = [plain.record(empty_reason="graph has no edges")]
        if self.n % 2:
            records.append(BoundRecord.not_applicable("thm2.3-even", f"n even required, got n={self.n}"))
        else:
            records.append(even.record(empty_reason="graph has no edges"))
        return records

    def corollary25(self) -> List[BoundRecord]:
        if self.n < 4:
            reason = f"n >= 4 required, got n={self.n}"
            return [BoundRecord.not_applicable("cor2.5", reason), BoundRecord.not_applicable("cor2.5-mid", reason)]
        final, middle = Tightest("cor2.5"), Tightest("cor2.5-mid")
        for e in range(self.m):
            contracted = self.nbc2_contracted(e)
            for x in self.xs:
                if x < self.m - 1 or x < 0:
                    continue
                value = self.q(e, x)
                bound = corollary25_bound(self.n, contracted, x)
                final.add(value, bound, edge=e, x=x, nbc2_contracted=contracted)
                if self.n >= 5:
                    mid = corollary25_middle(self.profile, self.n, e, x)
                    middle.add(value, mid, edge=e, x=x, stage="Q >= middle")
                    middle.add(mid, bound, edge=e, x=x, stage="middle >= final", nbc2_contracted=contracted)
        records = [final.record(empty_reason="graph has no edges")]
        if self.n < 5:
            records.append(BoundRecord.not_applicable("cor2.5-mid", f"n >= 5 required, got n={self.n}"))
        else:
            records.append(middle.record(empty_reason="graph has no edges"))
        return records

    def _subjects(self):
        yield "G", None, self.g
        for e, contraction in enumerate(self.contractions):
            yield "G/e", e, contraction.graph

    def fisher(self) -> BoundRecord:
        check = Tightest("fisher")
        for label, e, h in self._subjects():
            check.add_radical(fisher_bound(h.m), triangle_count(h), graph=label, edge=e, m_h=h.m)
        return check.record()

    def lemma33(self) -> BoundRecord:
        check = Tightest("lem3.3")
        for label, e, h in self._subjects():
            t = h.max_degree
            check.add_radical(maxdeg_triangle_bound(h.m, t), triangle_count(h), graph=label, edge=e, m_h=h.m, t=t)
        return check.record()

    def lemma31(self) -> BoundRecord:
        if not self.triangle_free:
            return BoundRecord.not_applicable("lem3.1", "graph has a triangle")
        if self.m < 3:
            return BoundRecord.not_applicable("lem3.1", f"m >= 3 required, got m={self.m}")
        check = Tightest("lem3.1")
        four = c4(self.g)
        exact = comb(self.m - 1, 2) - four
        for e, contraction in enumerate(self.contractions):
            check.add(contraction.profile.total(2), exact, edge=e, stage="NBC_2(G/e) >= C(m-1,2) - c4")
            check.add_equal(triangle_count(contraction.graph), four_cycles_through(self.g, e),
                            edge=e, stage="triangles(G/e) = 4-cycles through e")
        closed = k3free_closed_form(self.m)
        check.add_radical(exact, closed, stage="exact >= closed form")
        return check.record(
            c_used=exact,
            c_provenance=CProvenance.K3FREE_EXACT,
            display={"closed_form": closed.approx()},
            c4=four,
            c4_chain_exact=four_cycle_chain_holds(self.m, four),
        )

    def lemma34(self) -> BoundRecord:
        if self.m < 4:
            return BoundRecord.not_applicable("lem3.4", f"m >= 4 required, got m={self.m}")
        check = Tightest("lem3.4")
        bound = nbc2_lower_general(self.m)
        for e, contraction in enumerate(self.contractions):
            check.add(contraction.profile.total(2), bound,
                      edge=e, t=triangles_through(self.g, e), contracted_edges=contraction.graph.m)
        return check.record(c_used=bound, c_provenance=CProvenance.GENERAL)

    def theorem35(self) -> List[BoundRecord]:
        if self.m - 1 < 3:
            reason = f"m - 1 >= 3 required, got m={self.m}"
            return [BoundRecord.not_applicable("thm3.5", reason), BoundRecord.not_applicable("thm3.5-k3free", reason)]
        constants = [("thm3.5", nbc2_lower_general(self.m), CProvenance.GENERAL)]
        if self.triangle_free:
            constants.append(("thm3.5-k3free", Fraction(comb(self.m - 1, 2) - c4(self.g)), CProvenance.K3FREE_EXACT))
        records = []
        for record_id, c, provenance in constants:
            check = Tightest(record_id)
            for e in range(self.m):
                for x in self.xs:
                    if x >= self.m - 1:
                        check.add(self.q(e, x), theorem35_bound(self.n, x, c), edge=e, x=x)
            records.append(check.record(c_used=c, c_provenance=provenance,
                                        empty_reason="no sample point x >= m-1"))
        if not self.triangle_free:
            records.append(BoundRecord.not_applicable("thm3.5-k3free", "graph has a triangle"))
        return records

    def lemma42(self) -> BoundRecord:
        check = Tightest("lem4.2")
        rng = random.Random(self.settings.seed)
        for sample in range(self.settings.lemma42_samples):
            x, ds, qs = random_lemma42_instance(rng)
            product, bound = lemma42_sides(x, ds, qs)
            check.add(bound, product, sample=sample, x=str(x), d=[str(d) for d in ds], q=[str(q) for q in qs])
        return check.record(empty_reason="no samples requested")

    def forest_lemmas(self, la: ListAssignment, k: int) -> List[BoundRecord]:
        lower, upper = Tightest("lem4.1"), Tightest("lem4.3")
        sampled = 0
        for i in range(self.n):
            forests, total = sample_forests(self.g, self.eta, i, self.settings.forest_sample_cap, self.settings.seed)
            sampled += total - len(forests)
            for forest in forests:
                deficit = forest_deficit(self.g, la, k, forest)
                alpha_sum = forest_alpha_sum(self.g, la, forest)
                witness = dict(i=i, forest=list(forest.edges))
                lower.add(deficit, lemma41_bound(self.g, k, forest, alpha_sum), **witness)
                if i >= 1:
                    upper.add(lemma43_bound(self.g, k, forest, alpha_sum), deficit, **witness)
        return [lower.record(forests_skipped=sampled),
                upper.record(empty_reason="graph has no edges", forests_skipped=sampled)]

    def list_items(self, la: Optional[ListAssignment], k: Optional[int]) -> List[BoundRecord]:
        ids = ("lem4.1", "lem4.3", "lem4.4", "eq7", "thm1.1", "thm1.1-k3free")
        if la is None or k is None:
            return [BoundRecord.not_applicable(record_id, "no list assignment given") for record_id in ids]
        failed = []
        if la.n != self.n:
            failed.append(f"assignment covers {la.n} vertices, graph has {self.n}")
        elif not la.is_uniform(k):
            failed.append(f"assignment is not {k}-uniform")
        if k < 2:
            failed.append(f"k >= 2 required, got k={k}")
        if failed:
            return [BoundRecord.not_applicable(record_id, *failed) for record_id in ids]

        records = self.forest_lemmas(la, k)
        value = gap_details(self.g, la, k, self.eta, self.settings.list_budget).gap

        lemma44 = Tightest("lem4.4")
        lemma44.add(value, gap_lower_lemma44(self.g, self.eta, la, k, self.profile), k=k)
        records.append(lemma44.record())

        expansion = Tightest("eq7")
        expansion.add_equal(value, gap_expansion(self.g, self.eta, la, k), k=k)
        records.append(expansion.record())

        records.extend(verify_theorem_1_1(self.g, self.eta, la, k, gap_value=value))
        return records


def verify_all(g: Graph, eta: EdgeOrdering, la: Optional[ListAssignment] = None, k: Optional[int] = None,
               settings: Optional[VerifySettings] = None) -> BoundReport:
    """Every inequality of the chain on (G, eta, L, k), one record each.

    Graph-level items need only (G, eta); the list items are not-applicable
    without a k-assignment. Preconditions never raise.
    """
    settings = settings or VerifySettings()
    verifier = _Verifier(g, eta, settings)
    report = BoundReport(graph=graph_info(g), eta=list(eta.labels), k=k,
                         assignment=la.to_json() if la is not None else None)

    report.add(verifier.eq5())
    report.add(verifier.lemma22())
    report.add(verifier.lemma24())
    report.extend(verifier.theorem23())
    report.extend(verifier.corollary25())
    report.add(verifier.fisher())
    report.add(verifier.lemma33())
    report.add(verifier.lemma31())
    report.add(verifier.lemma34())
    report.extend(verifier.theorem35())
    report.add(verifier.lemma42())
    report.extend(verifier.list_items(la, k))

    logger.info(f"Verified {g}: {report.summary()}")
    return report

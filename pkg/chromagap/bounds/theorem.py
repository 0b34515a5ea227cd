"""The gap bound for k-assignments and its exhaustive equality case."""
from fractions import Fraction
from math import comb
from typing import List, Optional

from ..chromatic.qpoly import q_eval
from ..config.exceptions import BudgetExceededError, PreconditionError
from ..graph.core import Graph
from ..graph.stats import c4, triangle_count
from ..listcolor.assignment import (
    ListAssignment,
    alpha,
    count_all_assignments,
    count_canonical_assignments,
    iter_canonical_assignments,
)
from ..listcolor.counting import DEFAULT_LIST_BUDGET, count_list_colorings, gap_details
from ..models.report import BoundRecord, CProvenance, Verdict
from ..nbc.enumeration import NbcProfile, nbc_profile
from ..nbc.ordering import EdgeOrdering
from ..nbc.whitney import chromatic_via_whitney
from ..utils.logging import get_logger
from .nbc2 import nbc2_lower_general
from .radicals import k3free_closed_form
from .records import Tightest

logger = get_logger("chromagap.bounds.theorem")

DEFAULT_ASSIGNMENT_BUDGET = 10 ** 7


def gap_lower_lemma44(g: Graph, eta: EdgeOrdering, la: ListAssignment, k: int,
                      profile: Optional[NbcProfile] = None) -> Fraction:
    """(1/k) sum_e alpha(e) Q_eta(G, e, k)"""
    la.require_graph(g).require_uniform(k)
    if k < 2:
        raise PreconditionError(f"k >= 2 required, got {k}")
    profile = profile or nbc_profile(g, eta)
    total = Fraction(0)
    for e in range(g.m):
        a = alpha(la, g, e)
        if a:
            total += a * q_eval(g, eta, e, k, profile)
    return total / k


def theorem_rhs(c: Fraction, k: int, n: int, alpha_sum: int) -> Fraction:
    """c (2/3) k^(n-5) sum alpha; k^(n-5) is 1/k when n = 4"""
    return Fraction(2, 3) * c * Fraction(k) ** (n - 5) * alpha_sum


def _theorem_preconditions(g: Graph, la: ListAssignment, k: int) -> List[str]:
    failed = []
    if g.m < 4:
        failed.append(f"m >= 4 required, got m={g.m}")
    if k < g.m - 1:
        failed.append(f"k >= m-1 required, got k={k}, m={g.m}")
    if la.n != g.n:
        failed.append(f"assignment covers {la.n} vertices, graph has {g.n}")
    elif not la.is_uniform(k):
        failed.append(f"assignment is not {k}-uniform")
    return failed


def verify_theorem_1_1(g: Graph, eta: EdgeOrdering, la: ListAssignment, k: int,
                       gap_value: Optional[int] = None,
                       budget: int = DEFAULT_LIST_BUDGET) -> List[BoundRecord]:
    """Check P(G,L) - P(G,k) >= c (2/3) k^(n-5) sum_{uv} |L(u) - L(v)|.

    Always checks c = (m-1)(m-3)/8; for triangle-free G also the exact
    c = C(m-1, 2) - c4(G). Failed preconditions give not-applicable records.
    """
    failed = _theorem_preconditions(g, la, k)
    if failed:
        return [BoundRecord.not_applicable("thm1.1", *failed),
                BoundRecord.not_applicable("thm1.1-k3free", *failed)]

    if gap_value is None:
        gap_value = gap_details(g, la, k, eta, budget).gap
    alpha_sum = sum(alpha(la, g, e) for e in range(g.m))
    witness = dict(k=k, n=g.n, m=g.m, gap=gap_value, alpha_sum=alpha_sum, assignment=la.to_json())

    general = Tightest("thm1.1")
    c = nbc2_lower_general(g.m)
    general.add(gap_value, theorem_rhs(c, k, g.n, alpha_sum), **witness)
    if alpha_sum == 0:
        # equal lists along every edge: the gap itself must vanish
        general.add_equal(gap_value, 0, **witness)
    records = [general.record(c_used=c, c_provenance=CProvenance.GENERAL)]

    if triangle_count(g) > 0:
        records.append(BoundRecord.not_applicable("thm1.1-k3free", "graph has a triangle"))
        return records

    exact_c = Fraction(comb(g.m - 1, 2) - c4(g))
    closed = k3free_closed_form(g.m)
    k3free = Tightest("thm1.1-k3free")
    k3free.add(gap_value, theorem_rhs(exact_c, k, g.n, alpha_sum), **witness)
    records.append(k3free.record(
        c_used=exact_c,
        c_provenance=CProvenance.K3FREE_EXACT,
        display={"c_closed_form": closed.approx()},
        exact_c_dominates_closed_form=closed.compare(exact_c) <= 0,
    ))
    return records


def verify_corollary_1_2(g: Graph, k: int, universe: int,
                         budget: int = DEFAULT_ASSIGNMENT_BUDGET,
                         leaf_budget: int = DEFAULT_LIST_BUDGET) -> BoundRecord:
    """Over every k-assignment from {1..universe}: gap = 0 iff L(u) = L(v) on every edge.

    Assignments are visited up to color renaming, which changes neither the
    gap nor edge-constancy. ``lhs`` reports the least gap over assignments
    that differ on some edge.

    Raises:
        BudgetExceededError: if the number of assignments to visit exceeds ``budget``.
    """
    failed = []
    if k < 2:
        failed.append(f"k >= 2 required, got k={k}")
    if k < g.m - 1:
        failed.append(f"k >= m-1 required, got k={k}, m={g.m}")
    if universe < k:
        failed.append(f"universe must hold at least k colors, got {universe}")
    if failed:
        return BoundRecord.not_applicable("cor1.2", *failed)

    required = count_canonical_assignments(g.n, k, universe)
    if required > budget:
        raise BudgetExceededError("k-assignments up to renaming", required=required, budget=budget)

    p_gk = chromatic_via_whitney(g, EdgeOrdering.canonical(g)).evaluate(k)
    checked = constant = 0
    least = None
    violation = None
    for la in iter_canonical_assignments(g.n, k, universe):
        checked += 1
        value = count_list_colorings(g, la, leaf_budget) - p_gk
        if la.constant_on_edges(g):
            constant += 1
            if value != 0 and violation is None:
                violation = dict(assignment=la.to_json(), gap=value, reason="edge-constant lists with nonzero gap")
        else:
            if value <= 0 and violation is None:
                violation = dict(assignment=la.to_json(), gap=value, reason="lists differ on an edge but gap is not positive")
            if least is None or value < least[0]:
                least = (value, la)

    summary = dict(
        k=k,
        universe=universe,
        p_gk=p_gk,
        assignments_checked=checked,
        assignments_covered=count_all_assignments(g.n, k, universe),
        edge_constant_assignments=constant,
    )
    if violation:
        logger.error(f"cor1.2 violated on {g}: {violation}")
    witness = violation or (dict(assignment=least[1].to_json(), gap=least[0]) if least else {})
    return BoundRecord(
        id="cor1.2",
        lhs=str(least[0]) if least else None,
        rhs="0",
        verdict=Verdict.VIOLATED if violation else Verdict.HOLDS,
        witness={**witness, **summary},
        instances=checked,
    )

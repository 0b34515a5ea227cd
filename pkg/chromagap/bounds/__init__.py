from .radicals import RadicalBound, fisher_bound, four_cycle_chain_holds, k3free_closed_form, maxdeg_triangle_bound
from .nbc2 import K3FreeBound, nbc2_closed_form, nbc2_lower_general, nbc2_lower_k3free
from .qbounds import (
    corollary25_bound,
    corollary25_middle,
    q_lower_theorem35,
    theorem23_bound,
    theorem23_even_bound,
    theorem35_bound,
)
from .forests import (
    forest_alpha_sum,
    forest_deficit,
    lemma41_bound,
    lemma42_sides,
    lemma43_bound,
    random_lemma42_instance,
    sample_forests,
)
from .records import Tightest
from .theorem import DEFAULT_ASSIGNMENT_BUDGET, gap_lower_lemma44, theorem_rhs, verify_corollary_1_2, verify_theorem_1_1
from .verifier import VerifySettings, graph_info, verify_all

__all__ = [
    'RadicalBound',
    'fisher_bound',
    'four_cycle_chain_holds',
    'k3free_closed_form',
    'maxdeg_triangle_bound',
    'K3FreeBound',
    'nbc2_closed_form',
    'nbc2_lower_general',
    'nbc2_lower_k3free',
    'corollary25_bound',
    'corollary25_middle',
    'q_lower_theorem35',
    'theorem23_bound',
    'theorem23_even_bound',
    'theorem35_bound',
    'forest_alpha_sum',
    'forest_deficit',
    'lemma41_bound',
    'lemma42_sides',
    'lemma43_bound',
    'random_lemma42_instance',
    'sample_forests',
    'Tightest',
    'DEFAULT_ASSIGNMENT_BUDGET',
    'gap_lower_lemma44',
    'theorem_rhs',
    'verify_corollary_1_2',
    'verify_theorem_1_1',
    'VerifySettings',
    'graph_info',
    'verify_all',
]

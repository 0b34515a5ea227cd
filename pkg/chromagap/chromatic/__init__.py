from .polynomial import IntPolynomial, RatPolynomial, eval_poly
from .deletion_contraction import DEFAULT_MAX_EDGES, chromatic_deletion_contraction
from .brute_force import DEFAULT_COLORING_BUDGET, chromatic_by_interpolation, count_proper_colorings
from .qpoly import q_eval, q_poly

__all__ = [
    'IntPolynomial',
    'RatPolynomial',
    'eval_poly',
    'DEFAULT_MAX_EDGES',
    'chromatic_deletion_contraction',
    'DEFAULT_COLORING_BUDGET',
    'chromatic_by_interpolation',
    'count_proper_colorings',
    'q_eval',
    'q_poly',
]

from .assignment import (
    ListAssignment,
    alpha,
    assignments_equivalent,
    beta,
    count_all_assignments,
    count_canonical_assignments,
    iter_all_assignments,
    iter_canonical_assignments,
    parse_assignment,
    random_assignment,
    random_assignment_from_spec,
    read_assignment,
)
from .counting import (
    DEFAULT_LIST_BUDGET,
    GapValue,
    count_list_colorings,
    count_list_colorings_nbc,
    forest_weight,
    gap,
    gap_details,
    gap_expansion,
)

__all__ = [
    'ListAssignment',
    'alpha',
    'assignments_equivalent',
    'beta',
    'count_all_assignments',
    'count_canonical_assignments',
    'iter_all_assignments',
    'iter_canonical_assignments',
    'parse_assignment',
    'random_assignment',
    'random_assignment_from_spec',
    'read_assignment',
    'DEFAULT_LIST_BUDGET',
    'GapValue',
    'count_list_colorings',
    'count_list_colorings_nbc',
    'forest_weight',
    'gap',
    'gap_details',
    'gap_expansion',
]

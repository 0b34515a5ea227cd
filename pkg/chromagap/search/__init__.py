from .exhaustive import DEFAULT_EVALUATION_BUDGET, chromatic_value, default_universe, exact_pl
from .local import descend, heuristic_min
from .scan import threshold_scan

__all__ = [
    'DEFAULT_EVALUATION_BUDGET',
    'chromatic_value',
    'default_universe',
    'exact_pl',
    'descend',
    'heuristic_min',
    'threshold_scan',
]

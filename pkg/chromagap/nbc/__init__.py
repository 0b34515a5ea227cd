from .ordering import (
    EdgeOrdering,
    ParallelEdgeRule,
    induced_ordering,
    parse_ordering,
    resolve_ordering,
)
from .enumeration import (
    NbcForest,
    NbcProfile,
    broken_cycles,
    is_nbc,
    is_nbc_definitional,
    iter_cycles,
    iter_nbc_forests,
    nbc_forests,
    nbc_profile,
)
from .whitney import chromatic_via_whitney

__all__ = [
    'EdgeOrdering',
    'ParallelEdgeRule',
    'induced_ordering',
    'parse_ordering',
    'resolve_ordering',
    'NbcForest',
    'NbcProfile',
    'broken_cycles',
    'is_nbc',
    'is_nbc_definitional',
    'iter_cycles',
    'iter_nbc_forests',
    'nbc_forests',
    'nbc_profile',
    'chromatic_via_whitney',
]

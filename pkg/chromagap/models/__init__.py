from .config import ConfigModel, BudgetConfig, SearchDefaults, VerifyDefaults
from .report import Verdict, CProvenance, BoundRecord, BoundReport, GraphInfo
from .search import SearchMethod, SearchResult, ScanRow, ScanTable
from .run import Command, RunConfig

__all__ = [
    "ConfigModel",
    "BudgetConfig",
    "SearchDefaults",
    "VerifyDefaults",
    "Verdict",
    "CProvenance",
    "BoundRecord",
    "BoundReport",
    "GraphInfo",
    "SearchMethod",
    "SearchResult",
    "ScanRow",
    "ScanTable",
    "Command",
    "RunConfig",
]

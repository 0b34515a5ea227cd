from .manager import ConfigManager
from .paths import get_config_dir, get_config_file, get_data_dir, get_logs_dir
from .exceptions import (
    ChromagapError,
    ConfigError,
    ConfigValidationError,
    InputFormatError,
    GraphFormatError,
    OrderingFormatError,
    AssignmentFormatError,
    InvalidEdgeError,
    AssignmentError,
    PreconditionError,
    NotApplicableError,
    BudgetExceededError,
    OracleMismatchError,
)

__all__ = [
    "ConfigManager",
    "get_config_dir",
    "get_config_file",
    "get_data_dir",
    "get_logs_dir",
    "ChromagapError",
    "ConfigError",
    "ConfigValidationError",
    "InputFormatError",
    "GraphFormatError",
    "OrderingFormatError",
    "AssignmentFormatError",
    "InvalidEdgeError",
    "AssignmentError",
    "PreconditionError",
    "NotApplicableError",
    "BudgetExceededError",
    "OracleMismatchError",
]

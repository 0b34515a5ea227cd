from .logging import setup_logger, get_logger, run_label, current_run_label
from .file_utils import ensure_directory, dump_json, safe_write_json, safe_read_json
from .parallel import apply_pool

__all__ = [
    "setup_logger",
    "get_logger",
    "run_label",
    "current_run_label",
    "ensure_directory",
    "dump_json",
    "safe_write_json",
    "safe_read_json",
    "apply_pool",
]

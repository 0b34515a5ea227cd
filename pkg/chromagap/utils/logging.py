"""Logging for the ``chromagap`` logger tree.

Records carry the label of the graph being processed: the graph name for
single-graph commands, ``<stem>#<line>`` for batch entries. Pool workers are
forked with the parent's handlers, so interleaved batch output stays
attributable. The console handler writes to stderr; stdout is reserved for
JSON reports.
"""
import logging
import sys
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Iterator, Optional

LOG_FORMAT = '%(asctime)s %(levelname)-7s [%(graph)s] %(name)s: %(message)s'
LOG_FILE_NAME = 'chromagap.log'
LOG_FILE_MAX_BYTES = 5 * 1024 * 1024
LOG_FILE_BACKUPS = 5

_run_label: ContextVar[Optional[str]] = ContextVar('chromagap_run_label', default=None)


class GraphLabelFilter(logging.Filter):
    """Stamp each record with the current graph label ('-' outside a run)"""

    def filter(self, record: logging.LogRecord) -> bool:
        record.graph = _run_label.get() or '-'
        return True


def setup_logger(name: str, log_file: Optional[Path] = None, level: int = logging.INFO) -> logging.Logger:
    """Attach the stderr handler, plus a rotating file handler when log_file is given"""
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if logger.handlers:
        return logger

    formatter = logging.Formatter(LOG_FORMAT)
    label_filter = GraphLabelFilter()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.addFilter(label_filter)
    logger.addHandler(console_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file, maxBytes=LOG_FILE_MAX_BYTES, backupCount=LOG_FILE_BACKUPS, encoding='utf-8'
        )
        file_handler.setFormatter(formatter)
        file_handler.addFilter(label_filter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def current_run_label() -> Optional[str]:
    return _run_label.get()


@contextmanager
def run_label(label: Optional[str] = None) -> Iterator[str]:
    """Label log records emitted inside the block; a short random label when none is given"""
    label = label or uuid.uuid4().hex[:8]
    token = _run_label.set(label)
    try:
        yield label
    finally:
        _run_label.reset(token)

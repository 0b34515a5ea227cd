import json
import os
from pathlib import Path
from typing import Any, BinaryIO, Dict, List, Optional, Union

import filelock
import yaml


def ensure_directory(path: Path) -> None:
    """Ensure directory exists with proper permissions"""
    path.mkdir(parents=True, exist_ok=True)
    os.chmod(path, 0o700)


def dump_json(data: Any) -> str:
    """Serialize report data; key order is kept so identical inputs give identical bytes"""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def safe_write_json(data: Any, file_path: Path) -> None:
    """Safely write JSON data to file with file locking"""
    file_path.parent.mkdir(parents=True, exist_ok=True)

    lock_path = file_path.with_suffix(file_path.suffix + '.lock')

    with filelock.FileLock(lock_path):
        tmp_path = file_path.with_suffix(file_path.suffix + '.tmp')
        with open(tmp_path, 'w', encoding='utf-8') as f:
            f.write(dump_json(data))
        os.replace(tmp_path, file_path)


def safe_read_json(file_path: Path) -> Optional[Dict[str, Any]]:
    """Safely read JSON data from file with file locking"""
    if not file_path.exists():
        return None

    lock_path = file_path.with_suffix(file_path.suffix + '.lock')

    with filelock.FileLock(lock_path):
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (json.JSONDecodeError, FileNotFoundError):
            return None


def safe_write_yaml(data: Any, file_path: Path) -> None:
    """Safely write YAML data to file with file locking"""
    file_path.parent.mkdir(parents=True, exist_ok=True)

    lock_path = file_path.with_suffix(file_path.suffix + '.lock')

    with filelock.FileLock(lock_path):
        with open(file_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(data, f, default_flow_style=False, sort_keys=False)


def safe_read_yaml(file_path: Path) -> Optional[Dict[str, Any]]:
    """Safely read YAML data from file with file locking.

    Returns None when the file is missing; raises yaml.YAMLError on bad syntax
    so the caller can report it.
    """
    if not file_path.exists():
        return None

    lock_path = file_path.with_suffix(file_path.suffix + '.lock')

    with filelock.FileLock(lock_path):
        with open(file_path, 'r', encoding='utf-8') as f:
            return yaml.safe_load(f)


def read_text(file_path: Path) -> str:
    """Read a UTF-8 input file; undecodable bytes raise InputFormatError with their position"""
    from ..config.exceptions import InputFormatError

    data = Path(file_path).read_bytes()
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        line = data.count(b'\n', 0, e.start) + 1
        raise InputFormatError(f"{file_path}: not valid UTF-8 text", offset=e.start, line=line)


def read_byte_lines(source: Union[Path, BinaryIO]) -> List[bytes]:
    """Raw lines of a file or binary stream; per-line decoding is left to the caller"""
    if isinstance(source, Path):
        return source.read_bytes().splitlines()
    return source.read().splitlines()

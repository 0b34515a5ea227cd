import re
from typing import Dict, Tuple

from ..config.exceptions import ConfigValidationError


_KV_PATTERN = re.compile(r'^\s*([a-zA-Z_]+)\s*=\s*(-?\d+)\s*$')


def parse_key_values(spec: str, required: Tuple[str, ...], optional: Tuple[str, ...] = ()) -> Dict[str, int]:
    """Parse ``key=int,key=int`` option strings such as ``k=3,universe=5,seed=7``"""
    values: Dict[str, int] = {}
    for part in spec.split(','):
        if not part.strip():
            continue
        match = _KV_PATTERN.match(part)
        if not match:
            raise ConfigValidationError(f"Malformed option '{part}' in '{spec}' (expected key=integer)")
        key, value = match.group(1), int(match.group(2))
        if key not in required and key not in optional:
            raise ConfigValidationError(f"Unknown option '{key}' in '{spec}'")
        if key in values:
            raise ConfigValidationError(f"Duplicate option '{key}' in '{spec}'")
        values[key] = value

    missing = [key for key in required if key not in values]
    if missing:
        raise ConfigValidationError(f"Missing option(s) {', '.join(missing)} in '{spec}'")
    return values


def parse_generator_spec(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """Split ``name:a,b`` into the generator name and its integer arguments"""
    name, _, raw_args = spec.partition(':')
    name = name.strip().lower()
    if not re.match(r'^[a-z_0-9]+$', name):
        raise ConfigValidationError(f"Invalid generator name in '{spec}'")
    args: Tuple[int, ...] = ()
    if raw_args.strip():
        try:
            args = tuple(int(a) for a in raw_args.split(','))
        except ValueError:
            raise ConfigValidationError(f"Generator arguments must be integers in '{spec}'")
    if any(a < 0 for a in args):
        raise ConfigValidationError(f"Generator arguments must be non-negative in '{spec}'")
    return name, args

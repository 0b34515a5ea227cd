import multiprocessing
from typing import Any, Callable, Iterable, List, Optional, Sequence

from tqdm import tqdm


def _call(packed: tuple) -> Any:
    func, args = packed
    return func(*args)


def apply_pool(
        func: Callable[..., Any],
        arguments: Iterable[Sequence[Any]],
        workers: int = 1,
        desc: Optional[str] = None,
        verbose: bool = False) -> List[Any]:
    """
    Apply ``func`` to every argument tuple, optionally across a process pool.

    Results come back in input order whatever the pool width, so callers can
    merge them deterministically. ``func`` must be a module-level function when
    ``workers > 1``.
    """
    packed = [(func, tuple(args)) for args in arguments]
    progress = dict(total=len(packed), desc=desc, disable=not verbose, leave=False)

    if workers <= 1 or len(packed) <= 1:
        return [_call(item) for item in tqdm(packed, **progress)]

    with multiprocessing.Pool(processes=workers) as pool:
        return list(tqdm(pool.imap(_call, packed), **progress))

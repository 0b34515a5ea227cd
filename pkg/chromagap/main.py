import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from . import __version__
from .config import ConfigManager
from .config.paths import get_logs_dir
from .config.exceptions import BudgetExceededError, ChromagapError, OracleMismatchError
from .models.run import Command, RunConfig, VerifyMode
from .runner import EXIT_BUDGET, EXIT_USAGE, EXIT_VIOLATION, run
from .utils.file_utils import dump_json, safe_write_json
from .utils.logging import LOG_FILE_NAME, get_logger, setup_logger

# argparse destination -> RunConfig field
_FIELDS = {
    "graph": "graph_path",
    "graph6": "graph6_path",
    "generate": "generator",
    "catalog": "catalog",
    "eta": "eta",
    "lists": "lists_path",
    "random_lists": "random_lists",
    "k": "k",
    "edge": "edge",
    "universe": "universe",
    "k_max": "k_max",
    "mode": "mode",
    "run": "batch_command",
    "interpolate": "interpolate",
    "exhaustive": "exhaustive",
    "seed": "seed",
    "iterations": "iterations",
    "restarts": "restarts",
    "budget": "budget",
    "workers": "workers",
    "forest_workers": "forest_workers",
    "json": "output_path",
}


def setup_logging(level: str = "INFO", log_file: Optional[Path] = None) -> logging.Logger:
    """Install the stderr and rotating file handlers on the chromagap logger tree.

    Without ``--log-file`` the file log goes to ``<data dir>/logs/chromagap.log``;
    an unwritable default only drops the file handler.
    """
    root = logging.getLogger("chromagap")
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    if log_file is not None:
        return setup_logger("chromagap", log_file=log_file, level=getattr(logging, level))
    try:
        return setup_logger("chromagap", log_file=get_logs_dir() / LOG_FILE_NAME, level=getattr(logging, level))
    except OSError:
        for handler in list(root.handlers):
            root.removeHandler(handler)
        return setup_logger("chromagap", level=getattr(logging, level))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("graph source (exactly one)")
    source.add_argument("--graph", type=Path, help="Edge-list file ('n m' header, then 'u v' lines)")
    source.add_argument("--graph6", type=Path, help="graph6 file; '-' reads stdin (batch)")
    source.add_argument("--generate", metavar="SPEC", help="Generator such as cycle:5 or complete_bipartite:2,4")

    common.add_argument("--eta", default="canonical", help="Edge ordering: canonical, random:SEED or a file")
    common.add_argument("--lists", type=Path, help="List assignment file ('v: c1 c2 ...' lines)")
    common.add_argument("--random-lists", metavar="k=K,universe=U,seed=S", help="Seeded random k-assignment")
    common.add_argument("--k", type=int, help="Number of colors")
    common.add_argument("--universe", type=int, help="Color universe {1..U} for assignment enumeration")
    common.add_argument("--seed", type=int, help="Random seed (default from config)")
    common.add_argument("--budget", type=int, help="Override every enumeration budget")
    common.add_argument("--workers", type=int, help="Process pool width (default from config)")
    common.add_argument("--json", type=Path, metavar="PATH", help="Write the JSON report here instead of stdout")
    common.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--log-file", type=Path, help="Rotating log file (default <data dir>/logs/chromagap.log)")
    common.add_argument("--config", type=Path, help="Configuration file (default ~/.chromagap/config.yaml)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromagap",
        description="Exact chromatic and list-coloring polynomials with NBC-based bound verification",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    def add(command: Command, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(command.value, parents=[common], help=help_text)

    chromatic = add(Command.CHROMATIC, "Chromatic polynomial by Whitney's expansion and deletion-contraction")
    chromatic.add_argument("--interpolate", action="store_true", help="Also interpolate brute-force counts")

    add(Command.NBC_PROFILE, "NBC set counts, total and per edge")

    qpoly = add(Command.QPOLY, "Per-edge polynomial Q_eta(G, e, x)")
    qpoly.add_argument("--edge", type=int, help="Edge index in canonical order (default: every edge)")

    count = add(Command.COUNT, "P(G, L) by backtracking and by NBC forests")
    count.add_argument("--forest-workers", type=int, help="Sum NBC forest size classes in parallel")

    add(Command.GAP, "P(G, L) - P(G, k) for a k-assignment")

    verify = add(Command.VERIFY, "Verify the inequality chain and report every item")
    verify.add_argument("--mode", choices=[m.value for m in VerifyMode], help="all (default), theorem or corollary")

    search = add(Command.SEARCH_MIN, "Least P(G, L) over k-assignments")
    search.add_argument("--exhaustive", action="store_true", help="Enumerate every assignment up to renaming")
    search.add_argument("--iterations", type=int, help="Local search steps per restart")
    search.add_argument("--restarts", type=int, help="Local search restarts")

    scan = add(Command.SCAN, "Compare the least P(G, L) with P(G, k) for k = 2..k_max")
    scan.add_argument("--k-max", type=int, required=True)
    scan.add_argument("--iterations", type=int, help="Local search steps per restart")
    scan.add_argument("--restarts", type=int, help="Local search restarts")

    batch = add(Command.BATCH, "Run a command over a graph6 stream or a catalog")
    batch.add_argument("--run", required=True, choices=[c.value for c in Command if c not in (Command.BATCH, Command.DOCTOR)])
    batch.add_argument("--catalog", metavar="SPEC", help="connected:<max_n> or atlas:<max_n>")
    batch.add_argument("--mode", choices=[m.value for m in VerifyMode])
    batch.add_argument("--edge", type=int)
    batch.add_argument("--k-max", type=int)
    batch.add_argument("--interpolate", action="store_true")
    batch.add_argument("--exhaustive", action="store_true")
    batch.add_argument("--iterations", type=int)
    batch.add_argument("--restarts", type=int)

    doctor = subparsers.add_parser(Command.DOCTOR.value, help="Run diagnostics")
    doctor.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    doctor.add_argument("--log-file", type=Path)
    doctor.add_argument("--config", type=Path)
    doctor.add_argument("--json", type=Path, metavar="PATH")
    return parser


def build_run_config(args: argparse.Namespace, manager: Optional[ConfigManager]) -> RunConfig:
    """Merge parsed flags with configuration defaults; flags win"""
    values: Dict[str, Any] = {"command": args.command}
    for dest, field in _FIELDS.items():
        value = getattr(args, dest, None)
        if value is not None and value is not False:
            values[field] = value
    if manager is not None:
        search = manager.config.search
        values.setdefault("seed", search.seed)
        values.setdefault("iterations", search.iterations)
        values.setdefault("restarts", search.restarts)
    return RunConfig(**values)


def cli(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.log_level, args.log_file)
    logger = get_logger("chromagap.main")

    manager = ConfigManager(args.config)
    try:
        if args.command == Command.DOCTOR.value:
            config = build_run_config(args, None)
        else:
            config = build_run_config(args, manager)
        outcome = run(config, manager)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_USAGE
    except BudgetExceededError as e:
        logger.error(f"Budget refused: {e}")
        return EXIT_BUDGET
    except OracleMismatchError as e:
        logger.error(str(e))
        return EXIT_VIOLATION
    except ChromagapError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE
    except UnicodeError as e:
        logger.error(f"Undecodable input: {e}")
        return EXIT_USAGE

    if config.output_path is not None:
        safe_write_json(outcome.payload, config.output_path)
        logger.info(f"Report written to {config.output_path}")
    else:
        sys.stdout.write(dump_json(outcome.payload))
        sys.stdout.flush()
    return outcome.exit_code


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()

"""Command dispatch behind the CLI.

Every command returns a ``RunOutcome``: an exit code and a JSON-ready payload
whose top-level ``"schema"`` field versions the output. Library errors are
left to propagate; ``chromagap.main`` maps them to exit codes.
"""
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .bounds import VerifySettings, graph_info, verify_all, verify_corollary_1_2, verify_theorem_1_1
from .chromatic import (
    chromatic_by_interpolation,
    chromatic_deletion_contraction,
    q_poly,
)
from .config import ConfigManager
from .config.exceptions import (
    AssignmentError,
    BudgetExceededError,
    ChromagapError,
    ConfigError,
    ConfigValidationError,
    OracleMismatchError,
)
from .config.paths import get_config_dir, get_data_dir, initialize_directories
from .graph import Graph, catalog, from_edge_list, from_graph6, generate, read_edge_list, to_graph6
from .graph.formats import iter_graph6_lines, read_graph6_file
from .listcolor import (
    ListAssignment,
    count_list_colorings,
    count_list_colorings_nbc,
    gap_details,
    gap_expansion,
    random_assignment_from_spec,
    read_assignment,
)
from .models.config import ConfigModel
from .models.report import SCHEMA_VERSION, BoundReport, Verdict
from .models.run import Command, RunConfig, VerifyMode
from .nbc import EdgeOrdering, chromatic_via_whitney, nbc_profile, resolve_ordering
from .search import exact_pl, heuristic_min, threshold_scan
from .utils.file_utils import ensure_directory, read_byte_lines
from .utils.logging import get_logger, run_label
from .utils.parallel import apply_pool

logger = get_logger("chromagap.runner")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunOutcome:
    exit_code: int
    payload: Dict[str, Any]


def _payload(command: Command, **fields) -> Dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "command": command.value, **fields}


def effective_config(rc: RunConfig, config: ConfigModel) -> ConfigModel:
    """Apply the --budget and --workers flags on top of the loaded configuration"""
    config = config.model_copy(deep=True)
    if rc.budget is not None:
        config.budgets.coloring_leaves = rc.budget
        config.budgets.list_coloring_leaves = rc.budget
        config.budgets.assignment_evaluations = rc.budget
    if "workers" in rc.model_fields_set:
        config.workers = rc.workers
    return config


def load_graph(rc: RunConfig) -> Graph:
    """The single graph named by an edge-list file, a one-graph graph6 file or a generator spec"""
    if rc.graph_path is not None:
        return read_edge_list(rc.graph_path)
    if rc.graph6_path is not None:
        graphs = read_graph6_file(rc.graph6_path)
        if len(graphs) != 1:
            raise ConfigValidationError(
                f"{rc.graph6_path} holds {len(graphs)} graphs; use the batch command for streams"
            )
        return graphs[0]
    return generate(rc.generator)


def load_lists(rc: RunConfig, g: Graph) -> Optional[ListAssignment]:
    if rc.lists_path is not None:
        return read_assignment(rc.lists_path, g.n)
    if rc.random_lists is not None:
        return random_assignment_from_spec(g.n, rc.random_lists)
    return None


def _require_lists(rc: RunConfig, g: Graph) -> ListAssignment:
    la = load_lists(rc, g)
    if la is None:
        raise ConfigValidationError(f"{rc.command.value} requires --lists or --random-lists")
    return la


def _resolve_k(rc: RunConfig, la: Optional[ListAssignment]) -> int:
    if rc.k is not None:
        return rc.k
    if la is not None and la.uniform_size is not None:
        return la.uniform_size
    raise AssignmentError("--k is required when the lists are not uniform")


def _require_k(rc: RunConfig) -> int:
    if rc.k is None:
        raise ConfigValidationError(f"{rc.command.value} requires --k")
    return rc.k


def run_chromatic(g: Graph, eta: EdgeOrdering, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    whitney = chromatic_via_whitney(g, eta)
    contraction = chromatic_deletion_contraction(g, config.budgets.deletion_contraction_max_edges)
    oracles = {"whitney": whitney, "deletion_contraction": contraction}
    if rc.interpolate:
        oracles["interpolation"] = chromatic_by_interpolation(g, config.budgets.coloring_leaves)

    agree = all(p == whitney for p in oracles.values())
    if not agree:
        detail = ", ".join(f"{name}={p}" for name, p in oracles.items())
        logger.error(f"chromatic polynomial oracles disagree on {g}: {detail}")
    return RunOutcome(EXIT_OK if agree else EXIT_VIOLATION, _payload(
        Command.CHROMATIC,
        graph=graph_info(g).model_dump(),
        polynomial=str(whitney),
        coefficients=whitney.to_json(),
        oracles={name: p.to_json() for name, p in oracles.items()},
        agree=agree,
    ))


def run_nbc_profile(g: Graph, eta: EdgeOrdering) -> RunOutcome:
    profile = nbc_profile(g, eta)
    return RunOutcome(EXIT_OK, _payload(
        Command.NBC_PROFILE,
        graph=graph_info(g).model_dump(),
        eta=list(eta.labels),
        counts_total=list(profile.counts_total),
        counts_per_edge=[list(row) for row in profile.counts_per_edge],
    ))


def run_qpoly(g: Graph, eta: EdgeOrdering, rc: RunConfig) -> RunOutcome:
    profile = nbc_profile(g, eta)
    edges = [rc.edge] if rc.edge is not None else range(g.m)
    rows = []
    for e in edges:
        u, v = g.check_edge(e)
        q = q_poly(g, eta, e, profile)
        row = {"edge": e, "endpoints": [u, v], "polynomial": str(q), "coefficients": q.to_json()}
        if rc.k is not None:
            row["value"] = str(q.evaluate(rc.k))
        rows.append(row)
    return RunOutcome(EXIT_OK, _payload(
        Command.QPOLY, graph=graph_info(g).model_dump(), eta=list(eta.labels), edges=rows,
    ))


def run_count(g: Graph, eta: EdgeOrdering, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    la = _require_lists(rc, g)
    backtracking = count_list_colorings(g, la, config.budgets.list_coloring_leaves)
    forests = count_list_colorings_nbc(g, eta, la, workers=rc.forest_workers)
    if backtracking != forests:
        logger.error(f"P(G,L) mismatch on {g}: backtracking {backtracking}, NBC forests {forests}")
        raise OracleMismatchError(
            f"P(G,L) disagreement on {g}: backtracking gives {backtracking}, NBC forests give {forests}"
        )
    return RunOutcome(EXIT_OK, _payload(
        Command.COUNT,
        graph=graph_info(g).model_dump(),
        assignment=la.to_json(),
        p_gl=backtracking,
        backtracking=backtracking,
        nbc_forests=forests,
        agree=True,
    ))


def run_gap(g: Graph, eta: EdgeOrdering, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    la = _require_lists(rc, g)
    k = _resolve_k(rc, la)
    value = gap_details(g, la, k, eta, config.budgets.list_coloring_leaves)
    expansion = gap_expansion(g, eta, la, k)
    agree = expansion == value.gap
    if not agree:
        logger.error(f"gap mismatch on {g}: direct {value.gap}, forest expansion {expansion}")
    return RunOutcome(EXIT_OK if agree else EXIT_VIOLATION, _payload(
        Command.GAP,
        graph=graph_info(g).model_dump(),
        k=k,
        assignment=la.to_json(),
        p_gl=value.list_count,
        p_gk=value.chromatic_count,
        gap=value.gap,
        gap_expansion=expansion,
        agree=agree,
    ))


def run_verify(g: Graph, eta: EdgeOrdering, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    settings = VerifySettings.from_config(config)
    if rc.mode == VerifyMode.ALL:
        la = load_lists(rc, g)
        k = _resolve_k(rc, la) if la is not None else rc.k
        report = verify_all(g, eta, la, k, settings)
    elif rc.mode == VerifyMode.THEOREM:
        la = _require_lists(rc, g)
        k = _resolve_k(rc, la)
        report = BoundReport(graph=graph_info(g), eta=list(eta.labels), k=k, assignment=la.to_json())
        report.extend(verify_theorem_1_1(g, eta, la, k, budget=config.budgets.list_coloring_leaves))
    else:
        k = _require_k(rc)
        report = BoundReport(graph=graph_info(g), eta=list(eta.labels), k=k)
        report.add(verify_corollary_1_2(
            g, k, rc.universe or k + 2,
            budget=config.budgets.assignment_evaluations,
            leaf_budget=config.budgets.list_coloring_leaves,
        ))
    payload = {"command": Command.VERIFY.value, "mode": rc.mode.value, **report.to_json_dict()}
    payload = {"schema": payload.pop("schema"), **payload}
    return RunOutcome(EXIT_VIOLATION if report.has_violations else EXIT_OK, payload)


def run_search_min(g: Graph, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    k = _require_k(rc)
    if rc.exhaustive:
        result = exact_pl(g, k, rc.universe, budget=config.budgets.assignment_evaluations,
                          leaf_budget=config.budgets.list_coloring_leaves)
    else:
        result = heuristic_min(g, k, rc.universe, iterations=rc.iterations, seed=rc.seed,
                               restarts=rc.restarts, workers=config.workers,
                               leaf_budget=config.budgets.list_coloring_leaves)
    # past the threshold no assignment may beat the constant lists
    violation = k >= max(g.m - 1, 2) and result.best_value < result.p_gk
    if violation:
        logger.error(f"k={k} >= m-1 on {g} yet P(G,L)={result.best_value} < P(G,k)={result.p_gk}")
    return RunOutcome(EXIT_VIOLATION if violation else EXIT_OK, _payload(
        Command.SEARCH_MIN,
        graph=graph_info(g).model_dump(),
        result=result.model_dump(mode="json"),
        witness_lists=result.witness_lists_text(),
        corollary_violation=violation,
    ))


def run_scan(g: Graph, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    if rc.k_max is None:
        raise ConfigValidationError("scan requires --k-max")
    table = threshold_scan(g, rc.k_max, rc.universe, budget=config.budgets.assignment_evaluations,
                           iterations=rc.iterations, restarts=rc.restarts, seed=rc.seed,
                           workers=config.workers, leaf_budget=config.budgets.list_coloring_leaves)
    return RunOutcome(EXIT_VIOLATION if table.has_violations else EXIT_OK, _payload(
        Command.SCAN, graph=graph_info(g).model_dump(), scan=table.to_json_dict(),
    ))


def run_on_graph(command: Command, g: Graph, rc: RunConfig, config: ConfigModel) -> RunOutcome:
    """Run one per-graph command on an already loaded graph"""
    if command in (Command.SEARCH_MIN, Command.SCAN):
        return (run_search_min if command == Command.SEARCH_MIN else run_scan)(g, rc, config)
    eta = resolve_ordering(g, rc.eta)
    if command == Command.CHROMATIC:
        return run_chromatic(g, eta, rc, config)
    if command == Command.NBC_PROFILE:
        return run_nbc_profile(g, eta)
    if command == Command.QPOLY:
        return run_qpoly(g, eta, rc)
    if command == Command.COUNT:
        return run_count(g, eta, rc, config)
    if command == Command.GAP:
        return run_gap(g, eta, rc, config)
    if command == Command.VERIFY:
        return run_verify(g, eta, rc, config)
    raise ConfigValidationError(f"'{command.value}' is not a per-graph command")


def _batch_inputs(rc: RunConfig) -> List[Tuple[str, bytes]]:
    """(name, raw graph6 line) per input graph, in input order"""
    if rc.catalog is not None:
        return [(g.name, to_graph6(g).encode("ascii")) for g in catalog(rc.catalog)]
    path = rc.graph6_path
    if str(path) == "-":
        stream = getattr(sys.stdin, "buffer", None)
        lines = read_byte_lines(stream) if stream is not None else sys.stdin.read().encode("utf-8").splitlines()
        stem = "stdin"
    else:
        lines, stem = read_byte_lines(path), path.stem
    return [(f"{stem}#{number}", raw) for number, raw in iter_graph6_lines(lines)]


def batch_item(index: int, name: str, raw: bytes, rc: RunConfig, config: ConfigModel) -> Dict[str, Any]:
    """Run the batch command on one graph6 line; errors, including undecodable bytes, are captured in the entry"""
    entry: Dict[str, Any] = {
        "index": index,
        "name": name,
        "graph6": raw.decode("ascii", errors="backslashreplace"),
    }
    with run_label(name):
        try:
            g = from_graph6(raw, name=name)
            outcome = run_on_graph(rc.batch_command, g, rc, config)
        except BudgetExceededError as e:
            logger.warning(f"{name}: {e}")
            entry.update(status="budget", exit_code=EXIT_BUDGET, error=str(e))
        except OracleMismatchError as e:
            entry.update(status="error", exit_code=EXIT_VIOLATION, error=str(e))
        except ChromagapError as e:
            logger.warning(f"{name}: {e}")
            entry.update(status="error", exit_code=EXIT_USAGE, error=str(e))
        else:
            result = dict(outcome.payload)
            result.pop("schema", None)
            result.pop("command", None)
            entry.update(status="ok", exit_code=outcome.exit_code, result=result)
    return entry


def run_batch(rc: RunConfig, config: ConfigModel) -> RunOutcome:
    inputs = _batch_inputs(rc)
    entries = apply_pool(
        batch_item,
        [(index, name, text, rc, config) for index, (name, text) in enumerate(inputs)],
        workers=config.workers,
        desc="graphs",
        verbose=len(inputs) > 1,
    )

    verdicts = {verdict.value: 0 for verdict in Verdict}
    for entry in entries:
        for key, count in entry.get("result", {}).get("summary", {}).items():
            verdicts[key] += count
    failed = [entry for entry in entries if entry["exit_code"] == EXIT_VIOLATION]
    summary = {
        "graphs": len(entries),
        "ok": sum(entry["status"] == "ok" for entry in entries),
        "errors": sum(entry["status"] == "error" for entry in entries),
        "budget_refusals": sum(entry["status"] == "budget" for entry in entries),
        "violations": len(failed),
        "records": verdicts,
    }
    logger.info(f"Batch of {len(entries)} graphs: {summary}")
    return RunOutcome(EXIT_VIOLATION if failed else EXIT_OK, _payload(
        Command.BATCH, run=rc.batch_command.value, summary=summary, graphs=entries,
    ))


def _k4_checks(config: ConfigModel) -> List[Tuple[str, bool, str]]:
    k4 = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], name="K4")
    expected = chromatic_via_whitney(k4, EdgeOrdering.canonical(k4))
    checks = []
    oracles = {
        "whitney (random ordering)": chromatic_via_whitney(k4, EdgeOrdering.random(k4, seed=1)),
        "deletion-contraction": chromatic_deletion_contraction(k4, config.budgets.deletion_contraction_max_edges),
        "interpolation": chromatic_by_interpolation(k4, config.budgets.coloring_leaves),
    }
    for name, p in oracles.items():
        checks.append((f"K4 chromatic polynomial by {name}", p == expected, str(p)))
    checks.append(("K4 chromatic polynomial value at 4", expected.evaluate(4) == 24, str(expected.evaluate(4))))

    lists = ListAssignment.constant(4, 4)
    by_backtracking = count_list_colorings(k4, lists)
    by_forests = count_list_colorings_nbc(k4, EdgeOrdering.canonical(k4), lists)
    checks.append(("K4 list count on constant lists", by_backtracking == by_forests == 24,
                   f"backtracking {by_backtracking}, NBC forests {by_forests}"))
    return checks


def run_doctor(manager: ConfigManager) -> RunOutcome:
    """Validate configuration, data directories and the K4 oracle agreement"""
    logger.info("Running chromagap diagnostics...")
    checks: List[Dict[str, Any]] = []

    def report(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"name": name, "ok": ok, "detail": detail})
        if ok:
            logger.info(f"✓ {name}")
        else:
            logger.error(f"✗ {name}: {detail}")

    config = ConfigModel()
    try:
        config = manager.config
        errors = manager.validate_config()
        report("Configuration is valid", not errors, "; ".join(errors))
    except ConfigError as e:
        report("Configuration is valid", False, str(e))

    try:
        initialize_directories()
    except OSError as e:
        report("Data directories created", False, str(e))
    for directory in dict.fromkeys([get_config_dir(), get_data_dir()]):
        test_file = Path(directory) / ".write_test"
        try:
            ensure_directory(Path(directory))
            test_file.write_text("test")
            test_file.unlink()
            report(f"Directory {directory} is writable", True)
        except OSError as e:
            report(f"Directory {directory} is writable", False, str(e))

    try:
        for name, ok, detail in _k4_checks(config):
            report(name, ok, detail)
    except ChromagapError as e:
        report("K4 oracle check", False, str(e))

    logger.info("Diagnostics complete")
    healthy = all(check["ok"] for check in checks)
    return RunOutcome(EXIT_OK if healthy else EXIT_VIOLATION, _payload(Command.DOCTOR, checks=checks))


def run(rc: RunConfig, manager: Optional[ConfigManager] = None) -> RunOutcome:
    """Dispatch a validated RunConfig"""
    manager = manager or ConfigManager()
    if rc.command == Command.DOCTOR:
        return run_doctor(manager)
    config = effective_config(rc, manager.config)
    if rc.command == Command.BATCH:
        return run_batch(rc, config)
    g = load_graph(rc)
    with run_label(g.name or None):
        return run_on_graph(rc.command, g, rc, config)

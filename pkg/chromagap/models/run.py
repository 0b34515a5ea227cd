from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class Command(str, Enum):
    CHROMATIC = "chromatic"
    NBC_PROFILE = "nbc-profile"
    QPOLY = "qpoly"
    COUNT = "count"
    GAP = "gap"
    VERIFY = "verify"
    SEARCH_MIN = "search-min"
    SCAN = "scan"
    BATCH = "batch"
    DOCTOR = "doctor"


class VerifyMode(str, Enum):
    ALL = "all"
    THEOREM = "theorem"
    COROLLARY = "corollary"


class RunConfig(BaseModel):
    command: Command
    # graph source: exactly one of these
    graph_path: Optional[Path] = None
    graph6_path: Optional[Path] = None
    generator: Optional[str] = None
    catalog: Optional[str] = None

    eta: str = "canonical"
    lists_path: Optional[Path] = None
    random_lists: Optional[str] = None
    k: Optional[int] = Field(default=None, ge=0)
    edge: Optional[int] = Field(default=None, ge=0)
    universe: Optional[int] = Field(default=None, ge=1)
    k_max: Optional[int] = Field(default=None, ge=1)
    mode: VerifyMode = VerifyMode.ALL
    batch_command: Optional[Command] = None
    interpolate: bool = False
    exhaustive: bool = False

    seed: int = 0
    iterations: int = Field(default=200, ge=0)
    restarts: int = Field(default=4, ge=1)
    budget: Optional[int] = Field(default=None, gt=0)
    workers: int = Field(default=1, ge=1)
    forest_workers: int = Field(default=1, ge=1)
    output_path: Optional[Path] = None

    @model_validator(mode="after")
    def _check_sources(self) -> "RunConfig":
        sources = [s for s in (self.graph_path, self.graph6_path, self.generator, self.catalog) if s is not None]
        if self.command == Command.DOCTOR:
            if sources:
                raise ValueError("doctor takes no graph source")
            return self
        if len(sources) != 1:
            raise ValueError("exactly one graph source (--graph, --graph6, --generate, --catalog) is required")
        if self.catalog is not None and self.command != Command.BATCH:
            raise ValueError("--catalog is only valid with the batch command")
        if self.lists_path is not None and self.random_lists is not None:
            raise ValueError("--lists and --random-lists are mutually exclusive")
        if self.command == Command.BATCH:
            if self.batch_command in (None, Command.BATCH, Command.DOCTOR):
                raise ValueError("batch requires --run <command> naming a per-graph command")
            if self.graph_path is not None:
                raise ValueError("batch reads graph6 streams or catalogs, not edge-list files")
        return self

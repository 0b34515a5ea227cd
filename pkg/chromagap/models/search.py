from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class SearchMethod(str, Enum):
    EXHAUSTIVE = "exhaustive"
    LOCAL_SEARCH = "local-search"


class SearchResult(BaseModel):
    best_assignment: List[List[int]]
    best_value: int = Field(ge=0)
    method: SearchMethod
    iterations: int = 0
    seed: Optional[int] = None
    exhaustive: bool = False
    universe: int
    k: int
    p_gk: int
    # labelled "minimum over universe U"; only U >= n*k makes it the global P_l
    universe_sufficient: bool = False
    chordal: Optional[bool] = None

    @property
    def matches_chromatic(self) -> bool:
        return self.best_value == self.p_gk

    def witness_lists_text(self) -> str:
        return "".join(
            f"{v}: {' '.join(str(c) for c in colors)}\n"
            for v, colors in enumerate(self.best_assignment)
        )


class ScanRow(BaseModel):
    k: int
    universe: int
    min_found: int
    p_gk: int
    equal: bool
    method: SearchMethod
    exhaustive: bool
    corollary_applies: bool
    corollary_violation: bool = False


class ScanTable(BaseModel):
    n: int
    m: int
    max_degree: int
    chordal: bool
    rows: List[ScanRow] = Field(default_factory=list)
    stable_from: Optional[int] = None
    ratio_to_n: Optional[str] = None
    ratio_to_max_degree: Optional[str] = None

    @property
    def has_violations(self) -> bool:
        return any(row.corollary_violation for row in self.rows)

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1"


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


class CProvenance(str, Enum):
    GENERAL = "general"
    K3FREE_EXACT = "k3free-exact"
    K3FREE_CLOSED = "k3free-closed"


class Preconditions(BaseModel):
    met: bool = True
    failed: List[str] = Field(default_factory=list)


class BoundRecord(BaseModel):
    """One verified inequality: lhs >= rhs unless the id says otherwise"""
    id: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    verdict: Verdict
    witness: Dict[str, Any] = Field(default_factory=dict)
    preconditions: Preconditions = Field(default_factory=Preconditions)
    instances: int = 0
    c_used: Optional[str] = None
    c_provenance: Optional[CProvenance] = None
    display: Dict[str, float] = Field(default_factory=dict)

    @classmethod
    def not_applicable(cls, record_id: str, *reasons: str) -> "BoundRecord":
        return cls(
            id=record_id,
            verdict=Verdict.NOT_APPLICABLE,
            preconditions=Preconditions(met=False, failed=list(reasons)),
        )


class GraphInfo(BaseModel):
    name: str = ""
    n: int
    m: int
    graph6: str
    edges: List[List[int]]


class BoundReport(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    graph: GraphInfo
    eta: List[int]
    k: Optional[int] = None
    assignment: Optional[List[List[int]]] = None
    records: List[BoundRecord] = Field(default_factory=list)

    model_config = {"populate_by_name": True}

    def add(self, record: BoundRecord) -> BoundRecord:
        self.records.append(record)
        return record

    def extend(self, records: List[BoundRecord]) -> None:
        self.records.extend(records)

    def get(self, record_id: str) -> Optional[BoundRecord]:
        for record in self.records:
            if record.id == record_id:
                return record
        return None

    def summary(self) -> Dict[str, int]:
        counts = {verdict.value: 0 for verdict in Verdict}
        for record in self.records:
            counts[record.verdict.value] += 1
        return counts

    @property
    def has_violations(self) -> bool:
        return any(record.verdict == Verdict.VIOLATED for record in self.records)

    def to_json_dict(self) -> Dict[str, Any]:
        data = self.model_dump(mode="json", by_alias=True)
        data["summary"] = self.summary()
        return data

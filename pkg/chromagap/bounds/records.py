"""Accumulates many instances of one inequality into a single report record."""
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from ..models.report import BoundRecord, CProvenance, Preconditions, Verdict
from ..utils.logging import get_logger
from .radicals import RadicalBound

logger = get_logger("chromagap.bounds")

Value = Union[int, Fraction]


def exact_text(value: Any) -> str:
    return str(value)


class Tightest:
    """Checks instances of ``lhs >= rhs`` and keeps the tightest one.

    A violated instance always wins the witness slot so the record carries a
    reproducible counterexample.
    """

    def __init__(self, record_id: str):
        self.record_id = record_id
        self.instances = 0
        self._best = None
        self._violation = None

    def _offer(self, holds: bool, margin, lhs: str, rhs: str, witness: Dict[str, Any]):
        self.instances += 1
        entry = (margin, lhs, rhs, witness)
        if not holds and self._violation is None:
            self._violation = entry
            logger.error(f"{self.record_id} violated: {lhs} >= {rhs} fails at {witness}")
        if self._best is None or margin < self._best[0]:
            self._best = entry

    def add(self, lhs: Value, rhs: Value, **witness) -> bool:
        holds = lhs >= rhs
        self._offer(holds, Fraction(lhs) - Fraction(rhs), exact_text(lhs), exact_text(rhs), witness)
        return holds

    def add_equal(self, lhs: Value, rhs: Value, **witness) -> bool:
        holds = lhs == rhs
        self._offer(holds, -abs(Fraction(lhs) - Fraction(rhs)), exact_text(lhs), exact_text(rhs), witness)
        return holds

    def add_radical(self, lhs: Union[Value, RadicalBound], rhs: Union[Value, RadicalBound], **witness) -> bool:
        """One side is a RadicalBound; the verdict is exact, the margin used for ranking is approximate"""
        if isinstance(lhs, RadicalBound):
            holds = lhs.compare(rhs) >= 0
            margin = lhs.approx() - float(rhs)
        else:
            holds = rhs.compare(lhs) <= 0
            margin = float(lhs) - rhs.approx()
        self._offer(holds, margin, str(lhs), str(rhs), witness)
        return holds

    @property
    def violated(self) -> bool:
        return self._violation is not None

    def record(self, c_used: Optional[Value] = None, c_provenance: Optional[CProvenance] = None,
               display: Optional[Dict[str, float]] = None, empty_reason: str = "no instances to check",
               **extra) -> BoundRecord:
        if self.instances == 0:
            return BoundRecord.not_applicable(self.record_id, empty_reason)
        _, lhs, rhs, witness = self._violation or self._best
        return BoundRecord(
            id=self.record_id,
            lhs=lhs,
            rhs=rhs,
            verdict=Verdict.VIOLATED if self._violation else Verdict.HOLDS,
            witness={**witness, **extra},
            preconditions=Preconditions(),
            instances=self.instances,
            c_used=exact_text(c_used) if c_used is not None else None,
            c_provenance=c_provenance,
            display=display or {},
        )

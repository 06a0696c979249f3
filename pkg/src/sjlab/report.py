"""Verification records shared by the checks and the command line."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .formatting import to_json_obj
from .laurent import LaurentPoly


@dataclass
class CaseRecord:
    label: str
    params: Dict[str, Any]
    passed: bool
    detail: Optional[Dict[str, Any]] = None
    elapsed: Optional[float] = None

    def to_json_obj(self, timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {"case": self.label, "params": self.params, "pass": self.passed}
        if self.detail is not None:
            out["detail"] = self.detail
        if timing and self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class VerifyReport:
    suite: str
    cases: List[CaseRecord] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> List[CaseRecord]:
        return [c for c in self.cases if not c.passed]

    def add(self, label: str, params: Dict[str, Any], lhs: LaurentPoly, rhs: LaurentPoly) -> CaseRecord:
        """Record an equality check; on failure both sides are kept in canonical form."""
        ok = lhs == rhs
        detail = None if ok else {"lhs": to_json_obj(lhs), "rhs": to_json_obj(rhs)}
        rec = CaseRecord(label, params, ok, detail)
        self.cases.append(rec)
        return rec

    def extend(self, other: "VerifyReport") -> None:
        self.cases.extend(other.cases)

    def to_json_obj(self, timing: bool = False) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "total": len(self.cases),
            "failed": len(self.failures),
            "notes": self.notes,
            "cases": [c.to_json_obj(timing) for c in self.cases],
        }

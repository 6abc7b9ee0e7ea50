"""Pass/fail record shared by every verification suite."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class Failure:
    check: str
    input: Any
    expected: Any
    actual: Any


@dataclass
class VerificationReport:
    suite: str
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    check_counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, check: str, input: Any, expected: Any, actual: Any, ok: bool | None = None) -> bool:
        """Count one check; store a witness if it failed. Returns the verdict."""
        self.checks_run += 1
        self.check_counts[check] = self.check_counts.get(check, 0) + 1
        if ok is None:
            ok = expected == actual
        if not ok:
            self.failures.append(Failure(check, input, expected, actual))
        return ok

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        self.elapsed += other.elapsed
        for k, v in other.check_counts.items():
            self.check_counts[k] = self.check_counts.get(k, 0) + v
        return self

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        d["failures"] = [{k: _jsonable(v) for k, v in f.items()} for f in d["failures"]]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.suite}: {self.checks_run} checks, {len(self.failures)} failures ({self.elapsed:.2f}s)"
        if self.failures:
            f = self.failures[0]
            line += f"\n    first failure: {f.check} at {f.input!s}: expected {f.expected!s}, got {f.actual!s}"
        return line


def _jsonable(v: Any) -> Any:
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, int):
        # big integers stay exact
        return str(v) if abs(v) > 2**53 else v
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)

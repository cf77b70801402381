"""Pass/fail bookkeeping for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


def _jsonable(v):
    if isinstance(v, (bool, type(None))):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


@dataclass
class IdentityResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    observations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [_jsonable(f) for f in self.failures],
            "observations": [_jsonable(o) for o in self.observations],
        }


@dataclass
class IdentityReport:
    """Per-identity results; failures carry a reproducible counterexample."""

    results: dict = field(default_factory=dict)

    def result(self, name: str) -> IdentityResult:
        if name not in self.results:
            self.results[name] = IdentityResult(name)
        return self.results[name]

    def check(self, name: str, ok: bool, **payload) -> bool:
        r = self.result(name)
        r.checked += 1
        if not ok:
            r.failures.append(payload)
        return ok

    def observe(self, name: str, **payload):
        self.result(name).observations.append(payload)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    @property
    def failure_count(self) -> int:
        return sum(len(r.failures) for r in self.results.values())

    def failed_identities(self) -> list:
        return [n for n, r in sorted(self.results.items()) if not r.passed]

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        for name, r in other.results.items():
            mine = self.result(name)
            mine.checked += r.checked
            mine.failures.extend(r.failures)
            mine.observations.extend(r.observations)
        return self

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "failure_count": self.failure_count,
            "identities": [self.results[n].to_json() for n in sorted(self.results)],
        }

    def summary(self) -> str:
        lines = []
        for n in sorted(self.results):
            r = self.results[n]
            status = "ok" if r.passed else f"FAIL x{len(r.failures)}"
            lines.append(f"{n:<40} {r.checked:>6}  {status}")
        return "\n".join(lines)

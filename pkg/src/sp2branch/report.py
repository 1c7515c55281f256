"""Pass/fail bookkeeping shared by the verification routines."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass
class Check:
    id: str
    description: str
    passed: bool
    expected: str = ""
    actual: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("passed")
        d["status"] = self.status
        return d


@dataclass
class VerificationReport:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, description: str, passed: bool, expected="", actual="") -> Check:
        c = Check(id, description, bool(passed), str(expected), str(actual))
        self.checks.append(c)
        return c

    def extend(self, other: VerificationReport, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.description, c.passed, c.expected, c.actual))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def __str__(self):
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.id}: {c.description}")
            if not c.passed:
                lines.append(f"      expected {c.expected}, got {c.actual}")
        return "\n".join(lines)

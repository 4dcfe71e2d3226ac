"""Structured pass/fail reports for axiom checkers.

Every validator in the engine returns a CheckReport instead of raising:
a report lists each axiom it ran and, for every violation, the axiom
name, the basis-element witness, and both sides of the failed identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def __str__(self) -> str:
        loc = f" at {self.witness}" if self.witness else ""
        msg = f"{self.axiom}{loc}"
        if self.detail:
            msg += f": {self.detail}"
        return msg


@dataclass
class CheckReport:
    """Outcome of running a family of axiom checks."""

    subject: str = ""
    checked: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def record(self, axiom: str) -> None:
        if axiom not in self.checked:
            self.checked.append(axiom)

    def fail(self, axiom: str, witness: tuple = (), detail: str = "") -> None:
        self.record(axiom)
        self.violations.append(Violation(axiom, witness, detail))

    def check(self, axiom: str, condition: bool, witness: tuple = (), detail: str = "") -> None:
        self.record(axiom)
        if not condition:
            self.violations.append(Violation(axiom, witness, detail))

    def merge(self, other: "CheckReport", prefix: str = "") -> None:
        for name in other.checked:
            self.record(prefix + name)
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.detail))

    def failed_axioms(self) -> list[str]:
        seen: list[str] = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def summary(self) -> str:
        lines = []
        header = self.subject or "check"
        lines.append(f"{header}: {'PASS' if self.ok else 'FAIL'} "
                     f"({len(self.checked)} axioms, {len(self.violations)} violations)")
        failed = set(self.failed_axioms())
        for name in self.checked:
            lines.append(f"  [{'fail' if name in failed else ' ok '}] {name}")
        for v in self.violations[:20]:
            lines.append(f"    {v}")
        if len(self.violations) > 20:
            lines.append(f"    ... and {len(self.violations) - 20} more")
        return "\n".join(lines)

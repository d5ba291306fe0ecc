"""Check reports: named pass/fail lines with replayable witnesses.

Every verification operation returns a Report.  A line's witness is the
first counterexample found, printed in a form that can be replayed against
the operation that produced it.  Machine mode renders one line per check:

    CHECK <name> PASS
    CHECK <name> FAIL <witness>
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckLine:
    name: str
    passed: bool
    witness: str = ""

    def machine(self) -> str:
        if self.passed:
            return f"CHECK {self.name} PASS"
        tail = f" {self.witness}" if self.witness else ""
        return f"CHECK {self.name} FAIL{tail}"

    def human(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        tail = f"  [{self.witness}]" if (self.witness and not self.passed) else ""
        return f"  {mark:4s} {self.name}{tail}"


@dataclass
class Report:
    title: str = ""
    lines: list[CheckLine] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.lines.append(CheckLine(name, bool(passed), witness))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for line in other.lines:
            name = f"{prefix}{line.name}" if prefix else line.name
            self.lines.append(CheckLine(name, line.passed, line.witness))

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def failures(self) -> list[CheckLine]:
        return [line for line in self.lines if not line.passed]

    def __getitem__(self, name: str) -> CheckLine:
        for line in self.lines:
            if line.name == name:
                return line
        raise KeyError(name)

    def machine(self) -> str:
        return "\n".join(line.machine() for line in self.lines)

    def human(self) -> str:
        head = [self.title] if self.title else []
        return "\n".join(head + [line.human() for line in self.lines])

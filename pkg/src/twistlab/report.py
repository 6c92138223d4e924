"""Check reports shared by every verification suite."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = ""
    info: bool = False  # informational entries never fail a report


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness="", info=False) -> Check:
        check = Check(name, bool(passed), str(witness), info)
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.info))
        return self

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.info and not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counts(self):
        graded = [c for c in self.checks if not c.info]
        return {"pass": sum(c.passed for c in graded), "fail": len(self.failures),
                "info": len(self.checks) - len(graded)}

    def render(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"== {self.suite}"]
        for c in self.checks:
            status = "info" if c.info else ("pass" if c.passed else "FAIL")
            line = f"  {c.name.ljust(width)}  {status}"
            if c.witness:
                line += f"  {c.witness}"
            lines.append(line)
        k = self.counts()
        lines.append(f"  -- {k['pass']} passed, {k['fail']} failed, {k['info']} info")
        return "\n".join(lines)

    def render_machine(self) -> str:
        out = []
        for c in self.checks:
            status = "info" if c.info else ("pass" if c.passed else "fail")
            out.append(f"{self.suite}: {c.name}\t{status}\t{c.witness}")
        return "\n".join(out)

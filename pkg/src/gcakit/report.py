"""Structured pass/fail reports returned by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Check", "VerificationReport"]


@dataclass(frozen=True, slots=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    deviation: float = 0.0


@dataclass(frozen=True, slots=True)
class VerificationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [
                {
                    "name": c.name,
                    "pass": c.passed,
                    "detail": c.detail,
                    "deviation": c.deviation,
                }
                for c in self.checks
            ],
        }

    def __str__(self) -> str:
        lines = [f"overall: {'pass' if self.overall else 'FAIL'}"]
        for c in self.checks:
            mark = "ok " if c.passed else "BAD"
            lines.append(f"  [{mark}] {c.name}  {c.detail}".rstrip())
        return "\n".join(lines)

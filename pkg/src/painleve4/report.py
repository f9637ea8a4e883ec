"""Verification reports.

Every check carries its exact residual polynomial (zero iff the identity
holds); nothing is reduced to a bare boolean, so failures stay diagnosable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .ratfun import Poly


@dataclass(frozen=True)
class Check:
    name: str
    residual: Poly

    @property
    def ok(self) -> bool:
        return self.residual.is_zero

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "residual": self.residual.to_json()}


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple[Check, ...]
    metadata: Mapping = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "metadata": {k: str(v) for k, v in self.metadata.items()},
        }


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    level: str  # "parameters" or "functions"
    ok: bool

    def to_json(self) -> dict:
        return {"relation": self.relation, "level": self.level, "ok": self.ok}


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}

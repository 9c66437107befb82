"""Structured pass/fail/skipped reports and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexgroups import INF, LexVector
from .scalars import QuadExt, format_rational, format_scalar

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

SAMPLE_LIMITATION = (
    "Checks are exact but pointwise: membership transfer and bijectivity are "
    "verified on the given points; continuity of the chart maps is not checked."
)


def jsonable(obj):
    """Convert witnesses (vectors, sets, exact scalars) to plain JSON values."""
    if obj is INF:
        return "inf"
    if isinstance(obj, LexVector):
        return [format_scalar(c) for c in obj.coords]
    if isinstance(obj, QuadExt):
        return format_scalar(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        return format_rational(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(x) for x in obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return str(obj)


@dataclass
class Check:
    name: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_dict(self, key="name"):
        return {key: self.name, "status": self.status, "witness": jsonable(self.witness)}


@dataclass
class CheckReport:
    subject: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    key: str = "name"

    def add(self, name, status, **witness):
        self.checks.append(Check(name, status, witness))
        return status

    def check(self, name, condition, **witness):
        return self.add(name, PASS if condition else FAIL, **witness)

    def status_of(self, name):
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {
            "subject": self.subject,
            "notes": list(self.notes),
            "checks": [c.to_dict(self.key) for c in self.checks],
        }

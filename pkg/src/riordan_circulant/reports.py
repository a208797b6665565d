from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .series import ParamPoly, Poly, Series, format_poly


def jsonable(x: Any) -> Any:
    """Convert library values to JSON-ready structures.

    Exact values become strings ("p/q"), complex numbers become [re, im].
    """
    if isinstance(x, (Fraction, ParamPoly)):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, Poly):
        return format_poly(x)
    if isinstance(x, Series):
        return [str(c) for c in x.coeffs]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_dict"):
        return x.to_dict()
    if hasattr(x, "tolist"):
        return jsonable(x.tolist())
    return str(x)


@dataclass
class Report:
    """Outcome of a verification routine.

    ``checks`` counts the individual equalities tested; ``failure`` names the
    first one that did not hold.
    """

    claim: str
    passed: bool
    checks: int = 0
    details: dict = field(default_factory=dict)
    failure: str | None = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "checks": self.checks,
            "failure": self.failure,
            "details": jsonable(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

"""Verification outcome shared by the real and finite backends."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class VerificationReport:
    """``status`` is pass iff ``|residual| <= tolerance``.

    For the finite backend the residual counts failing primes and the
    tolerance is zero.
    """

    status: str
    residual: float
    tolerance: float
    backend: str
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_record(self) -> dict[str, Any]:
        if self.backend == "finite":
            return {
                "status": self.status,
                "backend": "finite",
                "primes_tested": self.details.get("primes_tested", 0),
                "skipped": self.details.get("skipped", []),
                "failures": self.details.get("failures", []),
            }
        return {
            "status": self.status,
            "backend": self.backend,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "trunc": self.details.get("trunc"),
            "terms": self.details.get("terms", []),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_record(), indent=indent)

    def summary(self) -> str:
        if self.backend == "finite":
            d = self.details
            return (
                f"{self.status}\tprimes_tested={d.get('primes_tested', 0)}"
                f"\tskipped={len(d.get('skipped', []))}\tfailures={len(d.get('failures', []))}"
            )
        return f"{self.status}\tresidual={self.residual:.3e}\ttolerance={self.tolerance:.3e}"

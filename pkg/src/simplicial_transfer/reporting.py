"""Report containers shared by the identity-check batteries.

Every battery evaluates a named identity over a complete enumerated basis
and records pass/fail with the first counterexample; reports render to JSON
(rationals as strings) and to aligned text.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    name: str
    basis_size: int
    passed: bool
    counterexample: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "basis_size": self.basis_size,
            "passed": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def to_text(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        line = f"[{mark}] {self.name} (basis size {self.basis_size})"
        if self.counterexample is not None:
            line += f"\n       counterexample: {self.counterexample}"
        return line


def _render_checks(checks) -> str:
    return "\n".join(rec.to_text() for rec in checks)


@dataclass
class ContractionReport:
    dimension: int
    poly_degree_bound: int
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(rec.passed for rec in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "poly_degree_bound": self.poly_degree_bound,
            "all_passed": self.all_passed,
            "checks": [rec.to_json_dict() for rec in self.checks],
        }

    def to_text(self) -> str:
        header = (
            f"contraction identities on the {self.dimension}-simplex, "
            f"polynomial degree <= {self.poly_degree_bound}"
        )
        return "\n".join([header, _render_checks(self.checks)])


@dataclass
class VerificationReport:
    family: str
    arity_range: tuple[int, int]
    basis: str
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(rec.passed for rec in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "arity_range": list(self.arity_range),
            "basis": self.basis,
            "all_passed": self.all_passed,
            "checks": [rec.to_json_dict() for rec in self.checks],
        }

    def to_text(self) -> str:
        lo, hi = self.arity_range
        header = f"{self.family} for arity {lo}..{hi} over {self.basis}"
        return "\n".join([header, _render_checks(self.checks)])

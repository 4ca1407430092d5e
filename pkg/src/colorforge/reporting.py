"""Check reports: per-axiom verdicts with exact failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Witness:
    """First basis tuple at which an axiom's two sides differ.

    ``args`` are basis indices, one per quantified slot (lexicographically
    least failure).  ``lhs``/``rhs`` hold the exact coordinate vectors of the
    two sides, so re-evaluating the axiom at ``args`` reproduces lhs != rhs.
    """

    args: tuple[int, ...]
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]


@dataclass(frozen=True)
class AxiomResult:
    axiom_id: str
    domain_size: int
    passed: bool
    witness: Witness | None = None
    note: str = ""

    def prefixed(self, prefix: str) -> "AxiomResult":
        return AxiomResult(
            f"{prefix}{self.axiom_id}",
            self.domain_size,
            self.passed,
            self.witness,
            self.note,
        )


@dataclass(frozen=True)
class CheckReport:
    entries: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, axiom_id: str) -> AxiomResult:
        for e in self.entries:
            if e.axiom_id == axiom_id:
                return e
        raise KeyError(axiom_id)

    def ids(self) -> tuple[str, ...]:
        return tuple(e.axiom_id for e in self.entries)

    def failed_ids(self) -> tuple[str, ...]:
        return tuple(e.axiom_id for e in self.entries if not e.passed)

    def restrict(self, tokens) -> "CheckReport":
        """Entries whose id matches any token (exact id or substring)."""
        toks = list(tokens)
        keep = tuple(
            e for e in self.entries if any(t == e.axiom_id or t in e.axiom_id for t in toks)
        )
        return CheckReport(keep)

    def prefixed(self, prefix: str) -> "CheckReport":
        return CheckReport(tuple(e.prefixed(prefix) for e in self.entries))

    def merged(self, *others: "CheckReport") -> "CheckReport":
        entries = list(self.entries)
        for other in others:
            entries.extend(other.entries)
        return CheckReport(tuple(entries))


def merge(*reports: CheckReport) -> CheckReport:
    entries: list[AxiomResult] = []
    for r in reports:
        entries.extend(r.entries)
    return CheckReport(tuple(entries))

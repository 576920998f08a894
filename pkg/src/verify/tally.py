"""Per-shard sweep accumulator with an associative merge."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

Signature = tuple[int, int, int]


def _bounded(records: list[str], cap: int) -> list[str]:
    return sorted(set(records))[:cap]


@dataclass
class SweepTally:
    """What a sweep has seen so far.

    Record lists keep the `cap` smallest graph6 strings, so any merge order
    gives the same lists. Signatures are kept in full.
    """

    cap: int
    class_size: int = 0
    violation_count: int = 0
    violations: list[str] = field(default_factory=list)
    at_least_violations: list[str] = field(default_factory=list)
    extremal_value: Optional[int] = None
    witnesses: list[str] = field(default_factory=list)
    signatures: set[Signature] = field(default_factory=set)

    @property
    def best(self) -> int:
        return -1 if self.extremal_value is None else self.extremal_value

    def _trim(self, records: list[str]) -> list[str]:
        return _bounded(records, self.cap) if len(records) > 4 * self.cap else records

    def add_violation(self, record: str) -> None:
        self.violation_count += 1
        self.violations.append(record)
        self.violations = self._trim(self.violations)

    def add_at_least(self, record: str) -> None:
        self.at_least_violations.append(record)
        self.at_least_violations = self._trim(self.at_least_violations)

    def observe_failure(self, value: int, record: str, signature: Signature) -> None:
        """A graph failing the conclusion with this value."""
        if value < self.best:
            return
        if value > self.best:
            self.extremal_value = value
            self.witnesses = []
            self.signatures = set()
        self.witnesses.append(record)
        self.witnesses = self._trim(self.witnesses)
        self.signatures.add(signature)

    def finalized(self) -> "SweepTally":
        self.violations = _bounded(self.violations, self.cap)
        self.at_least_violations = _bounded(self.at_least_violations, self.cap)
        self.witnesses = _bounded(self.witnesses, self.cap)
        return self

    def merge(self, other: "SweepTally") -> "SweepTally":
        cap = min(self.cap, other.cap)
        merged = SweepTally(
            cap=cap,
            class_size=self.class_size + other.class_size,
            violation_count=self.violation_count + other.violation_count,
            violations=_bounded(self.violations + other.violations, cap),
            at_least_violations=_bounded(self.at_least_violations + other.at_least_violations, cap),
        )
        if self.best == other.best:
            merged.extremal_value = self.extremal_value
            merged.witnesses = _bounded(self.witnesses + other.witnesses, cap)
            merged.signatures = self.signatures | other.signatures
        else:
            top = self if self.best > other.best else other
            merged.extremal_value = top.extremal_value
            merged.witnesses = _bounded(top.witnesses, cap)
            merged.signatures = set(top.signatures)
        return merged

"""Domain models: claims, parameters, graph classes and reports."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .exceptions import DomainError


class Claim(str, Enum):
    """Every statement a sweep can check."""
    # Theorems of the main results
    CB = "cb"
    PB = "pb"
    MB = "mb"
    C = "c"
    P = "p"
    # Baselines from the literature
    JACKSON = "jackson_exbip"
    LI_NING = "li_ning_exbip"
    WANG = "wang_matching"
    MOON_MOSER = "moon_moser"
    ERDOS = "erdos"
    ORE = "ore"
    # Open conjectures
    ADAMUS = "adamus_edges"
    CONJ_41 = "conj_41"
    # Structural audits
    POSA = "posa"
    BIPARTITE_POSA = "bipartite_posa"
    CORE_ORDER = "core_order"
    CLOSURE = "closure"
    CONVEXITY_F = "convexity_f"
    CONVEXITY_G = "convexity_g"


THEOREM_CLAIMS = frozenset({Claim.CB, Claim.PB, Claim.MB, Claim.C, Claim.P})
BASELINE_CLAIMS = frozenset(
    {Claim.JACKSON, Claim.LI_NING, Claim.WANG, Claim.MOON_MOSER, Claim.ERDOS, Claim.ORE}
)
CONJECTURE_CLAIMS = frozenset({Claim.ADAMUS, Claim.CONJ_41})
BIPARTITE_CLAIMS = frozenset(
    {Claim.CB, Claim.PB, Claim.MB, Claim.JACKSON, Claim.LI_NING, Claim.WANG,
     Claim.MOON_MOSER, Claim.ADAMUS, Claim.CONJ_41}
)


class ClassMode(str, Enum):
    BIPARTITE = "bipartite"
    GENERAL = "general"


class EnumerationMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass(frozen=True)
class BoundParams:
    """The symbols of the theorem statements: b, n, k, r, s, t (h is derived per claim)."""

    b: int = 0
    n: int = 0
    k: int = 0
    r: int = 1
    s: int = 1
    t: int = 1

    def h(self, claim: Claim) -> int:
        """Midpoint h for the theorem being instantiated."""
        if claim in (Claim.CB, Claim.CONJ_41):
            return (self.n - self.k) // 2
        if claim in (Claim.PB, Claim.MB):
            return (self.n - self.k - 1) // 2
        if claim is Claim.C:
            return (self.k - 1) // 2
        if claim is Claim.P:
            return (self.k - 2) // 2
        if claim in (Claim.MOON_MOSER, Claim.ERDOS):
            return (self.n - 1) // 2
        raise DomainError(f"claim {claim.value} has no midpoint h")

    def as_dict(self, claim: Optional[Claim] = None) -> dict[str, int]:
        data = asdict(self)
        if claim is not None:
            try:
                data["h"] = self.h(claim)
            except DomainError:
                pass
        return data


@dataclass(frozen=True)
class GraphClassSpec:
    """A labeled graph class: shape, hypotheses and how to walk it."""

    mode: ClassMode
    n: int
    b: int = 0
    connected: bool = False
    biconnected: bool = False
    min_degree: int = 0
    enumeration: EnumerationMode = EnumerationMode.EXHAUSTIVE
    count: int = 0
    seed: Optional[int] = None
    min_edges: int = 0

    @classmethod
    def bipartite(cls, n: int, b: int, **kwargs: Any) -> "GraphClassSpec":
        return cls(ClassMode.BIPARTITE, n, b, **kwargs)

    @classmethod
    def general(cls, n: int, **kwargs: Any) -> "GraphClassSpec":
        return cls(ClassMode.GENERAL, n, **kwargs)

    @property
    def order(self) -> int:
        return self.n + self.b if self.mode is ClassMode.BIPARTITE else self.n

    @property
    def edge_slots(self) -> int:
        if self.mode is ClassMode.BIPARTITE:
            return self.n * self.b
        return self.n * (self.n - 1) // 2

    def describe(self) -> dict[str, Any]:
        data = asdict(self)
        data["mode"] = self.mode.value
        data["enumeration"] = self.enumeration.value
        return data


class VerifyReport(BaseModel):
    """Machine-readable outcome of a theorem, baseline, conjecture or audit sweep."""

    claim: str
    params: dict[str, Any]
    class_spec: dict[str, Any] = Field(default_factory=dict)
    class_size: int = 0
    threshold: Optional[str] = None
    violation_count: int = 0
    violations: list[str] = Field(default_factory=list)
    extremal_value: Optional[str] = None
    tight: bool = False
    witnesses: list[str] = Field(default_factory=list)
    extremal_signatures: list[tuple[int, int, str]] = Field(default_factory=list)
    construction_signatures: list[tuple[int, int, str]] = Field(default_factory=list)
    at_least_violations: list[str] = Field(default_factory=list)
    seed: Optional[int] = None
    runtime_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    @property
    def construction_witnessed(self) -> bool:
        """Some extremal witness shares (order, size, count) with a sharpness construction."""
        return bool(set(self.extremal_signatures) & set(self.construction_signatures))

    def to_json(self, timing: bool = False) -> str:
        """Deterministic JSON; runtime is only included when `timing` is set."""
        exclude = None if timing else {"runtime_ms"}
        return self.model_dump_json(indent=2, exclude=exclude)


class RunConfig(BaseModel):
    """Validated view of one CLI invocation."""

    command: str
    format: Literal["json", "csv", "plain"] = "json"
    jobs: int = Field(default=1, ge=1)
    seed: Optional[int] = None
    samples: Optional[int] = Field(default=None, ge=0)
    timing: bool = False
    out: Optional[Path] = None

    @model_validator(mode="after")
    def _seed_for_random(self) -> "RunConfig":
        if self.samples is not None and self.seed is None:
            raise ValueError("--seed is required with --samples")
        return self

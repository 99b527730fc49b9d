from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class ViolationKind(str, Enum):
    BAD_STEP = "bad-step"
    BROKEN_CYCLE = "broken-cycle"
    DOMINATING_PAIR = "dominating-pair"


@dataclass(frozen=True)
class Violation:
    """
    A machine-checkable counterexample.

      bad-step         index_b = index_a + 1, step fails at `coordinate`
      broken-cycle     index_a = n-1, index_b = 0 (the wrap step), `coordinate` set
      dominating-pair  index_a < index_b and v[index_a] <= v[index_b]
    """

    kind: ViolationKind
    index_a: int
    index_b: int
    coordinate: int | None = None

    def __str__(self) -> str:
        text = f"{self.kind.value} {self.index_a} {self.index_b}"
        if self.coordinate is not None:
            text += f" coordinate {self.coordinate}"
        return text


@dataclass
class SampleReport:
    """Outcome of a sampled non-domination check; seed makes it replayable."""

    seed: int
    pairs_checked: int = 0
    exhaustive: bool = False
    violations: list[Violation] = field(default_factory=list)
    # Pairs where the structural witness coordinate did not actually separate
    # the two vectors. Always empty for an untampered construction.
    witness_failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.witness_failures

    def summary(self) -> str:
        return (
            f"pairs_checked {self.pairs_checked} seed {self.seed} "
            f"violations {len(self.violations)} witness_failures {len(self.witness_failures)}"
        )

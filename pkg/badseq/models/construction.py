from __future__ import annotations

from dataclasses import dataclass

BASE_SEQUENCE: tuple[tuple[int, int], ...] = ((1, 1), (0, 2), (1, 0), (0, 0))


@dataclass(frozen=True)
class Level:
    """
    One rung of the stacked construction. The innermost rung is the fixed
    4-vector base sequence (inner_length None); every other rung loops an
    inner sequence of length n 2n+1 times and adds an X and a Y coordinate
    at indices level_dim-2 and level_dim-1.
    """

    level_dim: int
    inner_length: int | None
    level_length: int

    @property
    def is_base(self) -> bool:
        return self.inner_length is None

    @property
    def x_coord(self) -> int:
        return self.level_dim - 2

    @property
    def y_coord(self) -> int:
        return self.level_dim - 1


@dataclass(frozen=True)
class ConstructionSpec:
    """Symbolic description of construct(target_dim); enough for random access."""

    target_dim: int
    padded: bool
    levels: tuple[Level, ...]

    @property
    def effective_dim(self) -> int:
        """target_dim rounded down to even; the padded coordinate sits at this index."""
        return self.target_dim - 1 if self.padded else self.target_dim

    @property
    def length(self) -> int:
        return self.levels[-1].level_length

    @property
    def outer_levels(self) -> tuple[Level, ...]:
        """Every non-base level, outermost first."""
        return tuple(reversed(self.levels[1:]))

    def __repr__(self) -> str:
        return f"<ConstructionSpec d={self.target_dim} levels={len(self.levels)} padded={self.padded}>"


@dataclass(frozen=True)
class IndexDecomposition:
    """k = 2n*i + j with 0 <= j < 2n; inner = k mod n (= j mod n)."""

    k: int
    i: int
    j: int
    inner: int

    def in_first_half(self, n: int) -> bool:
        return self.j < n

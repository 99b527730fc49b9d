"""
badseq/models/vector.py
------------------------
Vectors over the naturals, the reset/increment step relation and the
domination order. Everything else in the package is built on these
predicates.

Coordinates are 0-indexed throughout. A coordinate value is a plain Python
int, so values are arbitrary precision for free; fixed-width storage only
happens in the numpy fast paths, which check their own bounds.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from ..errors import DimensionMismatchError, InvalidVectorError

Vector = tuple[int, ...]


def make_vector(coords: Iterable[int]) -> Vector:
    """Validate and freeze coordinates into a Vector (dim >= 1, all values >= 0)."""
    vec = tuple(coords)
    if not vec:
        raise InvalidVectorError("a vector needs at least one coordinate")
    for value in vec:
        # bool is an int subclass; True as a coordinate is always a caller bug.
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidVectorError(f"coordinate {value!r} is not an integer")
        if value < 0:
            raise InvalidVectorError(f"coordinate {value} is negative")
    return vec


def step_ok(a: int, b: int) -> bool:
    """a -> b: the coordinate either increments by one or resets to 0."""
    return b == a + 1 or b == 0


def _same_dim(v: Sequence[int], w: Sequence[int]) -> None:
    if len(v) != len(w):
        raise DimensionMismatchError(len(v), len(w))


def first_bad_coordinate(v: Sequence[int], w: Sequence[int]) -> int | None:
    """Lowest coordinate where v -> w is not a legal step, or None."""
    _same_dim(v, w)
    for coord, (a, b) in enumerate(zip(v, w)):
        if not step_ok(a, b):
            return coord
    return None


def vec_step_ok(v: Sequence[int], w: Sequence[int]) -> bool:
    return first_bad_coordinate(v, w) is None


def leq(v: Sequence[int], w: Sequence[int]) -> bool:
    """v <= w coordinatewise, i.e. w dominates v."""
    _same_dim(v, w)
    return all(a <= b for a, b in zip(v, w))


def exceeding_coordinate(v: Sequence[int], w: Sequence[int]) -> int | None:
    """Lowest coordinate with v[l] > w[l] (a witness for v not <= w), or None."""
    _same_dim(v, w)
    for coord, (a, b) in enumerate(zip(v, w)):
        if a > b:
            return coord
    return None


@dataclass(frozen=True)
class VectorSequence:
    """
    An ordered, materialized run of same-dimension vectors. Empty sequences
    are legal (and vacuously valid, cyclic and non-dominating), which is why
    dim is stored rather than read off the first vector.
    """

    dim: int
    vectors: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidVectorError(f"dimension must be >= 1, got {self.dim}")
        for vec in self.vectors:
            if len(vec) != self.dim:
                raise DimensionMismatchError(self.dim, len(vec))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], dim: int | None = None) -> VectorSequence:
        """Build from any iterable of coordinate rows, validating each one."""
        vectors = tuple(make_vector(row) for row in rows)
        if dim is None:
            if not vectors:
                raise InvalidVectorError("an empty sequence needs an explicit dimension")
            dim = len(vectors[0])
        return cls(dim=dim, vectors=vectors)

    @property
    def length(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, index: int) -> Vector:
        return self.vectors[index]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def coordinate(self, coord: int) -> list[int]:
        """The history of one coordinate over time."""
        return [vec[coord] for vec in self.vectors]

    def replace(self, index: int, vec: Iterable[int]) -> VectorSequence:
        """Copy with one vector swapped out; handy for planting violations."""
        vectors = list(self.vectors)
        vectors[index] = make_vector(vec)
        return VectorSequence(dim=self.dim, vectors=tuple(vectors))

    def __repr__(self) -> str:
        return f"<VectorSequence dim={self.dim} length={self.length}>"

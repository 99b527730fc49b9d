"""
badseq/services/construction_service.py
----------------------------------------
The doubly-exponential cyclic non-dominating sequences: base case, the
d -> d+2 extension, length arithmetic, random access by index, streaming,
the structural domination witness and the binary-counter demo.

Layout of construct(d):
  - coordinates 0, 1 come from the 4-vector base sequence
  - each extension appends X then Y, so the level of dimension D owns
    coordinates D-2 (X) and D-1 (Y)
  - odd d appends one coordinate that is 0 at every step (same length)

For a level looping an inner sequence of length n, with m = n(2n+1):
  X_k = max(j - i, 0)   where k = 2n*i + j, 0 <= j < 2n
  Y_k = X_{(k+n) mod m}
and the inner coordinates at k are those of the inner sequence at k mod n.
Since n divides m at every level, the index into any level is simply
k mod (that level's length).
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

import numpy as np

from ..config import Config
from ..errors import (
    FixedWidthOverflowError,
    IndexOutOfRangeError,
    InvalidVectorError,
    PreconditionError,
    UnsupportedDimensionError,
)
from ..models import (
    BASE_SEQUENCE,
    ConstructionSpec,
    IndexDecomposition,
    Level,
    Vector,
    VectorSequence,
    exceeding_coordinate,
)
from ..utils import check_budget

log = logging.getLogger(__name__)

_BASE_ARRAY = np.array(BASE_SEQUENCE, dtype=np.int64)


# ---------------------------------------------------------------------------
# Base case and the d -> d+2 extension
# ---------------------------------------------------------------------------

def base_sequence() -> VectorSequence:
    return VectorSequence(dim=2, vectors=BASE_SEQUENCE)


def x_value(k: int, n: int) -> int:
    i, j = divmod(k, 2 * n)
    return j - i if j > i else 0


def y_value(k: int, n: int, m: int) -> int:
    return x_value((k + n) % m, n)


def extend(u: VectorSequence, verify: bool = True, cell_budget: int | None = None) -> VectorSequence:
    """
    Loop u 2n+1 times and append the X and Y coordinates. With verify on,
    u must pass check_cyclic and check_non_dominating_full; the first
    violation found is raised inside a PreconditionError. Levels built from
    trusted output of this module pass verify=False, since re-checking them
    is quadratic.
    """
    # Imported here: the verifier depends on this module for index_at.
    from .verifier_service import check_cyclic, check_non_dominating_full

    n = len(u)
    if n == 0:
        raise InvalidVectorError("extend needs a non-empty inner sequence")
    if verify:
        violation = check_cyclic(u) or check_non_dominating_full(u)
        if violation is not None:
            raise PreconditionError(violation)

    m = n * (2 * n + 1)
    budget = Config.CELL_BUDGET if cell_budget is None else cell_budget
    check_budget("materializing the extension", m * (u.dim + 2), budget)

    vectors = tuple(
        u[k % n] + (x_value(k, n), y_value(k, n, m))
        for k in range(m)
    )
    log.debug("extended dim %d length %d to dim %d length %d", u.dim, n, u.dim + 2, m)
    return VectorSequence(dim=u.dim + 2, vectors=vectors)


# ---------------------------------------------------------------------------
# Specs and length arithmetic
# ---------------------------------------------------------------------------

def _require_dim(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise UnsupportedDimensionError(
            f"the construction needs dimension >= 2, got {d!r} (d = 1 is only covered by search)"
        )


def make_spec(d: int) -> ConstructionSpec:
    _require_dim(d)
    levels = [Level(level_dim=2, inner_length=None, level_length=len(BASE_SEQUENCE))]
    for level_dim in range(4, d - d % 2 + 1, 2):
        n = levels[-1].level_length
        levels.append(Level(level_dim=level_dim, inner_length=n, level_length=n * (2 * n + 1)))
    return ConstructionSpec(target_dim=d, padded=d % 2 == 1, levels=tuple(levels))


def length_of(d: int) -> int:
    """Exact length of construct(d): 4 for d in {2, 3}, then L(d+2) = L(d)(2L(d)+1)."""
    _require_dim(d)
    length = len(BASE_SEQUENCE)
    for _ in range(d // 2 - 1):
        length = length * (2 * length + 1)
    return length


def closed_form_bound(d: int) -> int:
    """2^(3 * 2^(floor(d/2) - 1) - 1), the closed-form lower bound on the cyclic maximum."""
    _require_dim(d)
    return 1 << (3 * (1 << (d // 2 - 1)) - 1)


# ---------------------------------------------------------------------------
# Random access
# ---------------------------------------------------------------------------

def decompose(level: Level, k: int) -> IndexDecomposition:
    n = level.inner_length
    i, j = divmod(k, 2 * n)
    return IndexDecomposition(k=k, i=i, j=j, inner=k % n)


def _check_index(spec: ConstructionSpec, k: int, name: str = "index") -> None:
    if not 0 <= k < spec.length:
        raise IndexOutOfRangeError(f"{name} {k} is outside [0, {spec.length}) for d={spec.target_dim}")


def index_at(spec: ConstructionSpec, k: int) -> Vector:
    """The k-th vector of construct(d), in time linear in the number of levels."""
    _check_index(spec, k)
    coords = [0] * spec.target_dim
    for level in spec.outer_levels:
        n, m = level.inner_length, level.level_length
        coords[level.x_coord] = x_value(k, n)
        coords[level.y_coord] = y_value(k, n, m)
        k %= n
    coords[0], coords[1] = BASE_SEQUENCE[k]
    return tuple(coords)


class _Walker:
    """
    (i, j) of a position walking one level, advanced in O(1) amortized
    instead of a fresh divmod per step.
    """

    __slots__ = ("pos", "i", "j", "two_n", "m")

    def __init__(self, pos: int, n: int, m: int):
        self.two_n = 2 * n
        self.m = m
        self.pos = pos
        self.i, self.j = divmod(pos, self.two_n)

    @property
    def value(self) -> int:
        return self.j - self.i if self.j > self.i else 0

    def advance(self) -> None:
        self.pos += 1
        if self.pos == self.m:
            self.pos = self.i = self.j = 0
            return
        self.j += 1
        if self.j == self.two_n:
            self.j = 0
            self.i += 1


def _check_range(spec: ConstructionSpec, start: int, count: int) -> None:
    if start < 0 or count < 0 or start + count > spec.length:
        raise IndexOutOfRangeError(
            f"range [{start}, {start + count}) is outside [0, {spec.length}) for d={spec.target_dim}"
        )


def stream(spec: ConstructionSpec, start: int = 0, count: int | None = None) -> Iterator[Vector]:
    """Vectors start .. start+count-1 in order, arbitrary precision throughout."""
    if count is None:
        count = spec.length - start
    _check_range(spec, start, count)
    # Range errors surface here, not on the first next().
    return _stream(spec, start, count)


def _stream(spec: ConstructionSpec, start: int, count: int) -> Iterator[Vector]:
    if count == 0:
        return

    walkers = []
    for level in reversed(spec.outer_levels):  # innermost first, matching coordinate order
        n, m = level.inner_length, level.level_length
        pos = start % m
        walkers.append((_Walker(pos, n, m), _Walker((pos + n) % m, n, m)))
    base_len = len(BASE_SEQUENCE)
    base_pos = start % base_len
    tail = (0,) if spec.padded else ()

    for _ in range(count):
        coords = list(BASE_SEQUENCE[base_pos])
        for x_walker, y_walker in walkers:
            coords.append(x_walker.value)
            coords.append(y_walker.value)
            x_walker.advance()
            y_walker.advance()
        yield tuple(coords) + tail
        base_pos = (base_pos + 1) % base_len


def fits_fixed_width(spec: ConstructionSpec, limit: int | None = None) -> bool:
    # Every value is < length and the largest intermediate is k + n < 2 * length.
    limit = Config.FIXED_WIDTH_LIMIT if limit is None else limit
    return 2 * spec.length < limit


def block_at(spec: ConstructionSpec, ks: np.ndarray) -> np.ndarray:
    """index_at vectorized over an int64 array of indices (no range checks)."""
    out = np.zeros((len(ks), spec.target_dim), dtype=np.int64)
    k = ks.astype(np.int64, copy=True)
    for level in spec.outer_levels:
        n, m = level.inner_length, level.level_length
        out[:, level.x_coord] = _x_block(k, n)
        out[:, level.y_coord] = _x_block((k + n) % m, n)
        k %= n
    out[:, :2] = _BASE_ARRAY[k]
    return out


def _x_block(k: np.ndarray, n: int) -> np.ndarray:
    i, j = np.divmod(k, 2 * n)
    return np.maximum(j - i, 0)


def stream_blocks(
    spec: ConstructionSpec,
    start: int = 0,
    count: int | None = None,
    block_size: int | None = None,
) -> Iterator[np.ndarray]:
    """
    The same vectors as stream(), as int64 arrays of up to block_size rows.
    Only available while the whole construction fits in fixed width.
    """
    if not fits_fixed_width(spec):
        raise FixedWidthOverflowError(
            f"d={spec.target_dim} has length {spec.length}; too long for int64 blocks, use stream()"
        )
    if count is None:
        count = spec.length - start
    _check_range(spec, start, count)
    block_size = Config.BLOCK_SIZE if block_size is None else block_size
    return _stream_blocks(spec, start, start + count, block_size)


def _stream_blocks(spec: ConstructionSpec, start: int, end: int, block_size: int) -> Iterator[np.ndarray]:
    for lo in range(start, end, block_size):
        hi = min(lo + block_size, end)
        yield block_at(spec, np.arange(lo, hi, dtype=np.int64))


def materialize(spec: ConstructionSpec, cell_budget: int | None = None) -> VectorSequence:
    budget = Config.CELL_BUDGET if cell_budget is None else cell_budget
    check_budget(f"materializing construct({spec.target_dim})", spec.length * spec.target_dim, budget)
    log.info("materializing construct(%d), length %d", spec.target_dim, spec.length)
    return VectorSequence(dim=spec.target_dim, vectors=tuple(stream(spec)))


def construct(d: int, cell_budget: int | None = None) -> VectorSequence:
    return materialize(make_spec(d), cell_budget=cell_budget)


# ---------------------------------------------------------------------------
# Structural non-domination witness
# ---------------------------------------------------------------------------

def domination_witness(spec: ConstructionSpec, a: int, b: int) -> int:
    """
    A coordinate l with construct(d)[a][l] > construct(d)[b][l], found from
    the structure in O(levels) rather than by comparing the vectors.

    At each level: when a mod n < b mod n the inner sequence already
    separates them, so drop to (a mod n, b mod n). Otherwise with
    a = 2n*i_a + j_a and b = 2n*i_b + j_b the halves decide:
      j_a < n,  j_b < n   ->  Y
      j_a >= n, j_b >= n  ->  X
      j_a >= n, j_b < n   ->  X
      j_a < n,  j_b >= n  ->  Y
    The base level compares the two base vectors directly.
    """
    _check_index(spec, a, "a")
    _check_index(spec, b, "b")
    if a >= b:
        raise IndexOutOfRangeError(f"witness needs a < b, got a={a} b={b}")

    for level in spec.outer_levels:
        n = level.inner_length
        if a % n < b % n:
            a, b = a % n, b % n
            continue
        da, db = decompose(level, a), decompose(level, b)
        a_low, b_low = da.in_first_half(n), db.in_first_half(n)
        if a_low and b_low:
            return level.y_coord
        if not a_low:
            # both high, or a high and b low
            return level.x_coord
        return level.y_coord

    coord = exceeding_coordinate(BASE_SEQUENCE[a], BASE_SEQUENCE[b])
    # The base sequence is non-dominating, so a < b always has a witness.
    assert coord is not None, (a, b)
    return coord


# ---------------------------------------------------------------------------
# Binary counter demo
# ---------------------------------------------------------------------------

def binary_counter(bits: int, cell_budget: int | None = None) -> VectorSequence:
    """
    Count down from all-ones in binary without ever holding a coordinate
    fixed: coordinate l at time t is (t mod 2^l) + 1 while bit l of the
    countdown is set, else 0. Coordinate bits-1 is the most significant bit.
    """
    if not isinstance(bits, int) or bits < 1:
        raise UnsupportedDimensionError(f"binary_counter needs bits >= 1, got {bits!r}")
    length = 1 << bits
    budget = Config.CELL_BUDGET if cell_budget is None else cell_budget
    check_budget(f"materializing a {bits}-bit counter", length * bits, budget)

    def cell(t: int, coord: int) -> int:
        half = 1 << coord
        return t % half + 1 if t % (2 * half) < half else 0

    vectors = tuple(tuple(cell(t, coord) for coord in range(bits)) for t in range(length))
    return VectorSequence(dim=bits, vectors=vectors)


def counter_value(vec: Vector) -> int:
    """Decode a counter vector back to the number it encodes (nonzero = bit set)."""
    return sum(1 << coord for coord, value in enumerate(vec) if value > 0)

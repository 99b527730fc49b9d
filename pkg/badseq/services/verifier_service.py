"""
badseq/services/verifier_service.py
------------------------------------
Validity, cyclicity and non-domination checks, each returning the first
Violation found (or None) so every failure is a reproducible
counterexample rather than a bare False.

Three ways in:
  - materialized VectorSequence: check_valid / check_cyclic /
    check_non_dominating_full
  - ConstructionSpec too long to materialize: scan_spec streams int64
    blocks for validity + cyclicity, check_non_dominating_sampled samples
    pairs through index_at and cross-checks the structural witness
  - any materialized sequence, sampled: sample_sequence

Architecture decisions:
  - The full pairwise scan runs on a numpy array. Values that do not fit
    int64 fall back to an object array (Python ints, same comparisons, just
    slower) instead of wrapping silently.
  - "First" means lexicographically first (i, j): smallest i, then smallest
    j. Workers each scan a contiguous block of i and the lowest block with
    a hit wins, so the answer does not depend on the worker count.
  - Sampling draws a uniform rank in [0, N(N-1)/2) with
    random.Random(seed).randrange and unranks it to (a, b), one draw per
    pair. Mersenne Twister + randrange is stable across platforms and
    Python 3 versions, so a (seed, samples) pair always replays the same
    report.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from multiprocessing import Pool

import numpy as np

from ..config import Config
from ..models import (
    ConstructionSpec,
    SampleReport,
    Vector,
    VectorSequence,
    Violation,
    ViolationKind,
    first_bad_coordinate,
    leq,
)
from ..utils import check_budget, pair_count, unrank_pair
from .construction_service import (
    domination_witness,
    fits_fixed_width,
    index_at,
    stream,
    stream_blocks,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Validity and cyclicity
# ---------------------------------------------------------------------------

def check_valid(seq: VectorSequence) -> Violation | None:
    for index in range(len(seq) - 1):
        coord = first_bad_coordinate(seq[index], seq[index + 1])
        if coord is not None:
            return Violation(ViolationKind.BAD_STEP, index, index + 1, coord)
    return None


def check_cyclic(seq: VectorSequence) -> Violation | None:
    """check_valid, then the wrap step from the last vector back to the first."""
    violation = check_valid(seq)
    if violation is not None:
        return violation
    if len(seq) == 0:
        return None
    last = len(seq) - 1
    coord = first_bad_coordinate(seq[last], seq[0])
    if coord is not None:
        return Violation(ViolationKind.BROKEN_CYCLE, last, 0, coord)
    return None


def _first_bad_row(prev: np.ndarray, nxt: np.ndarray) -> tuple[int, int] | None:
    """(row, coordinate) of the first illegal step prev[r] -> nxt[r], if any."""
    bad = (nxt != prev + 1) & (nxt != 0)
    rows = np.flatnonzero(bad.any(axis=1))
    if rows.size == 0:
        return None
    row = int(rows[0])
    return row, int(np.flatnonzero(bad[row])[0])


def scan_spec(spec: ConstructionSpec, cyclic: bool = True, block_size: int | None = None) -> Violation | None:
    """
    Validity (and with cyclic, the wrap step) of construct(d) without
    materializing it. Uses int64 blocks when the construction fits in fixed
    width, otherwise walks stream() one vector at a time.
    """
    if not fits_fixed_width(spec):
        log.warning("d=%d is too long for int64 blocks; scanning vector by vector", spec.target_dim)
        return _scan_stream(spec, cyclic)

    first = last = None
    offset = 0
    for block in stream_blocks(spec, block_size=block_size):
        if first is None:
            first = block[0]
            prev, nxt, base = block[:-1], block[1:], 0
        else:
            prev = np.vstack([last[np.newaxis, :], block[:-1]])
            nxt, base = block, offset - 1
        hit = _first_bad_row(prev, nxt)
        if hit is not None:
            row, coord = hit
            return Violation(ViolationKind.BAD_STEP, base + row, base + row + 1, coord)
        last = block[-1]
        offset += len(block)
        log.debug("scanned %d / %d vectors of d=%d", offset, spec.length, spec.target_dim)

    if cyclic and first is not None:
        hit = _first_bad_row(last[np.newaxis, :], first[np.newaxis, :])
        if hit is not None:
            return Violation(ViolationKind.BROKEN_CYCLE, spec.length - 1, 0, hit[1])
    return None


def _scan_stream(spec: ConstructionSpec, cyclic: bool) -> Violation | None:
    first = prev = None
    for index, vec in enumerate(stream(spec)):
        if prev is None:
            first = vec
        else:
            coord = first_bad_coordinate(prev, vec)
            if coord is not None:
                return Violation(ViolationKind.BAD_STEP, index - 1, index, coord)
        prev = vec
    if cyclic and prev is not None:
        coord = first_bad_coordinate(prev, first)
        if coord is not None:
            return Violation(ViolationKind.BROKEN_CYCLE, spec.length - 1, 0, coord)
    return None


# ---------------------------------------------------------------------------
# Full pairwise non-domination
# ---------------------------------------------------------------------------

def _as_array(seq: VectorSequence) -> np.ndarray:
    rows = [list(vec) for vec in seq]
    try:
        return np.array(rows, dtype=np.int64).reshape(len(seq), seq.dim)
    except OverflowError:
        log.info("values exceed int64; full check falls back to Python integers")
        return np.array(rows, dtype=object).reshape(len(seq), seq.dim)


def _first_dominated_in(arr: np.ndarray, lo: int, hi: int) -> tuple[int, int] | None:
    """Smallest (i, j) with lo <= i < hi, i < j and arr[i] <= arr[j]."""
    for i in range(lo, hi):
        later = arr[i + 1:]
        if later.shape[0] == 0:
            break
        hits = np.flatnonzero((later >= arr[i]).all(axis=1))
        if hits.size:
            return i, i + 1 + int(hits[0])
    return None


def check_non_dominating_full(
    seq: VectorSequence,
    pair_budget: int | None = None,
    workers: int = 1,
) -> Violation | None:
    """
    Every pair i < j, reporting the lexicographically first dominating pair.
    Refuses with BudgetExceededError above pair_budget pair-coordinate
    comparisons; use the sampled check for longer sequences.
    """
    budget = Config.PAIR_BUDGET if pair_budget is None else pair_budget
    check_budget("full pairwise check (pair-coordinate comparisons)", pair_count(len(seq)) * seq.dim, budget)
    if len(seq) < 2:
        return None

    arr = _as_array(seq)
    n = len(seq)
    if workers <= 1 or n < 2 * workers:
        hit = _first_dominated_in(arr, 0, n)
    else:
        # Row i compares against n-i-1 others; equal-size chunks of i would
        # leave the first worker with most of the work, so cut on pair counts.
        bounds = _balanced_bounds(n, workers)
        with Pool(workers) as pool:
            hits = pool.starmap(_first_dominated_in, [(arr, lo, hi) for lo, hi in bounds])
        hit = next((h for h in hits if h is not None), None)

    if hit is None:
        return None
    return Violation(ViolationKind.DOMINATING_PAIR, hit[0], hit[1])


def _balanced_bounds(n: int, parts: int) -> list[tuple[int, int]]:
    total = pair_count(n)
    bounds, lo, acc = [], 0, 0
    target = total / parts
    for i in range(n):
        acc += n - i - 1
        if acc >= target * (len(bounds) + 1) and len(bounds) < parts - 1:
            bounds.append((lo, i + 1))
            lo = i + 1
    bounds.append((lo, n))
    return [b for b in bounds if b[0] < b[1]]


# ---------------------------------------------------------------------------
# Sampled non-domination
# ---------------------------------------------------------------------------

def _pairs(length: int, samples: int, seed: int):
    """
    Yields (a, b) pairs. When samples covers every pair, each pair once in
    rank order; otherwise `samples` uniform draws.
    """
    total = pair_count(length)
    if samples >= total:
        for rank in range(total):
            yield unrank_pair(rank)
        return
    rng = random.Random(seed)
    for _ in range(samples):
        yield unrank_pair(rng.randrange(total))


def _sample(
    length: int,
    accessor: Callable[[int], Vector],
    samples: int,
    seed: int,
    witness: Callable[[int, int], int] | None,
) -> SampleReport:
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    report = SampleReport(seed=seed, exhaustive=samples >= pair_count(length))
    for a, b in _pairs(length, samples, seed):
        va, vb = accessor(a), accessor(b)
        report.pairs_checked += 1
        if leq(va, vb):
            report.violations.append(Violation(ViolationKind.DOMINATING_PAIR, a, b))
        if witness is not None:
            coord = witness(a, b)
            if not va[coord] > vb[coord]:
                report.witness_failures.append((a, b))
    if report.violations:
        log.warning("sampled check found %d dominating pairs (seed %d)", len(report.violations), seed)
    return report


def check_non_dominating_sampled(
    spec: ConstructionSpec,
    samples: int,
    seed: int,
    accessor: Callable[[int], Vector] | None = None,
) -> SampleReport:
    """
    Sampled pairs a < b of construct(d) through random access, each also
    certified by domination_witness. `accessor` replaces index_at, which is
    how the tests plant a corrupted construction.
    """
    if accessor is None:
        def accessor(k: int) -> Vector:
            return index_at(spec, k)

    def witness(a: int, b: int) -> int:
        return domination_witness(spec, a, b)

    return _sample(spec.length, accessor, samples, seed, witness)


def sample_sequence(seq: VectorSequence, samples: int, seed: int) -> SampleReport:
    """Sampled check of an arbitrary materialized sequence (no witness available)."""
    return _sample(len(seq), seq.__getitem__, samples, seed, None)

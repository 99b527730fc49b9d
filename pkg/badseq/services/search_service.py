"""
badseq/services/search_service.py
----------------------------------
Exhaustive search for the exact maximal length of non-dominating valid
(L_d) and cyclic (L°_d) sequences at tiny dimensions. Independent of the
construction: it only uses the step relation and leq, so it works as a
ground-truth oracle for both the construction and the verifier.

Start-vector cap. A search with length budget B only tries start vectors
whose coordinates are <= B. Proof sketch: fix a coordinate and a start
value s > B. Until its first reset the coordinate is strictly increasing,
so between two pre-reset vectors it never separates v_i from a later v_j.
After a reset at step r >= 1, its value at step t is t - r' for the latest
reset r' <= t, hence <= B - 2 in any sequence of length <= B. So for
i < j the comparison v_i^l <= v_j^l has the same truth value whether the
start value is s or B: both pre-reset -> true either way; i pre-reset,
j post-reset -> false either way; both post-reset -> independent of s.
Lowering s to B therefore keeps the sequence conforming, and every
conforming sequence of length <= B has a counterpart inside the cap.

Exactness. The DFS explores every conforming valid prefix up to depth B.
If no prefix reaches depth B then L_d < B and the result is exact. Every
cyclic sequence is valid, so the cyclic maximum is exact under the same
condition. Cyclic candidates are also filtered by the cyclic-value bound
(a cyclic sequence of length L has every value < L).

Order. Successors are tried in lexicographic order of their choice mask,
coordinate 0 most significant and reset before increment. Since a reset
(0) is always smaller than an increment (>= 1), that is the same as
lexicographic order on the successor vectors, so the first optimal
sequence found is the lexicographically least one.
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from multiprocessing import Pool

from ..config import Config
from ..errors import UnsupportedDimensionError
from ..models import SearchResult, Vector, VectorSequence, leq, vec_step_ok
from ..utils import check_budget

log = logging.getLogger(__name__)

MIN_SEARCH_DIM = 1
MAX_SEARCH_DIM = 3


def _require_search_dim(d: int) -> None:
    if not isinstance(d, int) or not MIN_SEARCH_DIM <= d <= MAX_SEARCH_DIM:
        raise UnsupportedDimensionError(
            f"exhaustive search supports {MIN_SEARCH_DIM} <= d <= {MAX_SEARCH_DIM}, got {d!r}"
        )


def successors(vec: Vector) -> Iterator[Vector]:
    """Every w with vec -> w, in lexicographic order."""
    choices = [(0, value + 1) for value in vec]
    return (tuple(choice) for choice in itertools.product(*choices))


def _dominates_earlier(prefix: list[Vector], vec: Vector) -> bool:
    return any(leq(earlier, vec) for earlier in prefix)


def _cyclic_candidate(prefix: list[Vector]) -> bool:
    length = len(prefix)
    if any(value >= length for vec in prefix for value in vec):
        return False
    return vec_step_ok(prefix[-1], prefix[0])


@dataclass
class _Branch:
    """Result of searching everything below one start vector."""

    nodes: int = 0
    best: list[Vector] = field(default_factory=list)
    deepest: int = 0
    completed: bool = True


def _search_branch(start: Vector, depth_limit: int, cyclic: bool, node_budget: int) -> _Branch:
    branch = _Branch()
    prefix: list[Vector] = []

    def visit(vec: Vector) -> bool:
        """Push vec and recurse; False once the node budget is spent."""
        if branch.nodes >= node_budget:
            branch.completed = False
            return False
        branch.nodes += 1
        prefix.append(vec)
        depth = len(prefix)
        branch.deepest = max(branch.deepest, depth)

        candidate = _cyclic_candidate(prefix) if cyclic else True
        if candidate and depth > len(branch.best):
            branch.best = list(prefix)

        keep_going = True
        if depth < depth_limit:
            for nxt in successors(vec):
                if _dominates_earlier(prefix, nxt):
                    continue
                if not visit(nxt):
                    keep_going = False
                    break
        prefix.pop()
        return keep_going

    visit(start)
    return branch


def start_vectors(d: int, cap: int, symmetry: bool = False) -> list[Vector]:
    """
    All start vectors with coordinates in [0, cap], lexicographic. With
    symmetry on, only sorted ones: permuting coordinates maps conforming
    sequences to conforming sequences, so the maximum is unchanged.
    """
    starts = itertools.product(range(cap + 1), repeat=d)
    if symmetry:
        return [s for s in starts if list(s) == sorted(s)]
    return list(starts)


def _search(
    d: int,
    length_budget: int,
    cyclic: bool,
    node_budget: int | None,
    symmetry: bool,
    workers: int,
) -> SearchResult:
    _require_search_dim(d)
    if length_budget < 1:
        raise ValueError(f"length_budget must be >= 1, got {length_budget}")
    budget = Config.NODE_BUDGET if node_budget is None else node_budget
    cap = length_budget
    starts = start_vectors(d, cap, symmetry)

    best: list[Vector] = []
    deepest = 0
    nodes = 0
    exhausted = False

    def take(branch: _Branch) -> None:
        nonlocal best, deepest, nodes
        nodes += branch.nodes
        deepest = max(deepest, branch.deepest)
        # Branches arrive in start-vector order, so strictly longer only.
        if len(branch.best) > len(best):
            best = branch.best

    if workers > 1 and len(starts) > 1:
        # Branches are consumed in start order. The first one that would pass
        # the budget is re-run here with exactly what is left, matching the
        # single-worker result; leaving the pool block terminates the workers
        # still busy on later starts.
        run_branch = functools.partial(
            _search_branch, depth_limit=length_budget, cyclic=cyclic, node_budget=budget
        )
        with Pool(workers) as pool:
            for start, branch in zip(starts, pool.imap(run_branch, starts)):
                remaining = budget - nodes
                if branch.completed and branch.nodes <= remaining:
                    take(branch)
                    continue
                take(_search_branch(start, length_budget, cyclic, remaining))
                exhausted = True
                break
    else:
        for start in starts:
            branch = _search_branch(start, length_budget, cyclic, budget - nodes)
            take(branch)
            if not branch.completed:
                exhausted = True
                break

    exact = not exhausted and deepest < length_budget
    if exhausted:
        log.warning("search d=%d stopped after %d nodes; best so far %d", d, nodes, len(best))
    else:
        log.info("search d=%d (%s) explored %d nodes, max %d", d, "cyclic" if cyclic else "valid", nodes, len(best))
    return SearchResult(
        dim=d,
        cyclic=cyclic,
        max_length=len(best),
        witness=VectorSequence(dim=d, vectors=tuple(best)),
        nodes_explored=nodes,
        cap_used=cap,
        exact=exact,
        budget_exhausted=exhausted,
    )


def max_valid_length(
    d: int,
    length_budget: int | None = None,
    node_budget: int | None = None,
    symmetry: bool = False,
    workers: int = 1,
) -> SearchResult:
    budget = Config.LENGTH_BUDGET if length_budget is None else length_budget
    return _search(d, budget, False, node_budget, symmetry, workers)


def max_cyclic_length(
    d: int,
    length_budget: int | None = None,
    node_budget: int | None = None,
    symmetry: bool = False,
    workers: int = 1,
) -> SearchResult:
    budget = Config.LENGTH_BUDGET if length_budget is None else length_budget
    return _search(d, budget, True, node_budget, symmetry, workers)


# ---------------------------------------------------------------------------
# Enumeration (cross-validation harness)
# ---------------------------------------------------------------------------

def enumerate_sequences(
    d: int,
    exact_length: int,
    cap: int,
    cyclic: bool = False,
    prune: bool = True,
    node_budget: int | None = None,
) -> Iterator[VectorSequence]:
    """
    Every valid (with cyclic, cyclic) non-dominating sequence of exactly
    exact_length vectors with all coordinates <= cap, in lexicographic
    order. prune=False only discards dominated sequences once complete,
    which is what the pruning is checked against.
    """
    if d < 1 or exact_length < 0 or cap < 0:
        raise ValueError(f"need d >= 1, exact_length >= 0, cap >= 0; got {d}, {exact_length}, {cap}")
    budget = Config.NODE_BUDGET if node_budget is None else node_budget
    check_budget("enumeration search space", (cap + 1) ** (d * exact_length), budget)
    return _enumerate(d, exact_length, cap, cyclic, prune)


def _enumerate(d: int, exact_length: int, cap: int, cyclic: bool, prune: bool) -> Iterator[VectorSequence]:
    if exact_length == 0:
        yield VectorSequence(dim=d)
        return

    prefix: list[Vector] = []

    def conforming() -> bool:
        if not prune:
            for j, later in enumerate(prefix):
                if _dominates_earlier(prefix[:j], later):
                    return False
        return not cyclic or vec_step_ok(prefix[-1], prefix[0])

    def walk(vec: Vector) -> Iterator[VectorSequence]:
        prefix.append(vec)
        if len(prefix) == exact_length:
            if conforming():
                yield VectorSequence(dim=d, vectors=tuple(prefix))
        else:
            for nxt in successors(vec):
                if max(nxt) > cap:
                    continue
                if prune and _dominates_earlier(prefix, nxt):
                    continue
                yield from walk(nxt)
        prefix.pop()

    for start in itertools.product(range(cap + 1), repeat=d):
        yield from walk(start)

from __future__ import annotations

from dataclasses import dataclass

from .vector import VectorSequence


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of an exhaustive search. exact is False when either the length
    budget was reached (a longer sequence may exist) or the node budget ran
    out; max_length/witness are then the best found so far.
    """

    dim: int
    cyclic: bool
    max_length: int
    witness: VectorSequence
    nodes_explored: int
    cap_used: int
    exact: bool
    budget_exhausted: bool = False

    def __repr__(self) -> str:
        mode = "cyclic" if self.cyclic else "valid"
        return f"<SearchResult d={self.dim} {mode} max_length={self.max_length} exact={self.exact}>"

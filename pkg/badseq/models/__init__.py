# Value types only; nothing in here touches budgets, config or I/O.
from .vector import (
    Vector,
    VectorSequence,
    exceeding_coordinate,
    first_bad_coordinate,
    leq,
    make_vector,
    step_ok,
    vec_step_ok,
)
from .construction import BASE_SEQUENCE, ConstructionSpec, IndexDecomposition, Level
from .violation import SampleReport, Violation, ViolationKind
from .search import SearchResult

__all__ = [
    "Vector", "VectorSequence", "make_vector", "step_ok", "vec_step_ok", "leq",
    "first_bad_coordinate", "exceeding_coordinate",
    "BASE_SEQUENCE", "ConstructionSpec", "IndexDecomposition", "Level",
    "Violation", "ViolationKind", "SampleReport", "SearchResult",
]

import re
from math import isqrt

from .errors import BudgetExceededError

_DECIMAL_RE = re.compile(r"[0-9]+")


def parse_decimal(raw: str, field_name: str = "value") -> int:
    """
    Parse an unsigned decimal string of any size. Rejects signs, spaces,
    underscores and scientific notation, all of which int() would accept or
    half-accept, because indices here are exact and often astronomically
    large.
    """
    if raw is None or not _DECIMAL_RE.fullmatch(raw):
        raise ValueError(f"{field_name} must be an unsigned decimal integer, got {raw!r}")
    return int(raw)


def pair_count(length: int) -> int:
    """Number of index pairs a < b in a sequence of this length."""
    return length * (length - 1) // 2 if length > 1 else 0


def unrank_pair(rank: int) -> tuple[int, int]:
    """
    Inverse of rank(a, b) = b(b-1)/2 + a for 0 <= a < b. Exact at any size
    since it only uses integer square roots.
    """
    b = (1 + isqrt(1 + 8 * rank)) // 2
    # isqrt floors, so b can only be off by one in either direction at the
    # boundaries between triangular numbers.
    while b * (b - 1) // 2 > rank:
        b -= 1
    while (b + 1) * b // 2 <= rank:
        b += 1
    return rank - b * (b - 1) // 2, b


def check_budget(what: str, needed: int, budget: int) -> None:
    if needed > budget:
        raise BudgetExceededError(what, needed, budget)

import os

from dotenv import load_dotenv

# A .env next to the working directory may carry BADSEQ_THREADS; nothing
# else is read from the environment.
load_dotenv()


def _resolve_threads() -> int:
    """BADSEQ_THREADS if set to a positive integer, else every core."""
    raw = os.environ.get("BADSEQ_THREADS", "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError:
            value = 0
        if value >= 1:
            return value
    return os.cpu_count() or 1


class Config:
    """Shared defaults."""
    # Materialization refuses above length x dim cells; callers switch to
    # stream()/index_at() beyond that.
    CELL_BUDGET = 10**8
    # Full pairwise check refuses above this many pair-coordinate comparisons.
    PAIR_BUDGET = 10**8
    NODE_BUDGET = 10**7
    LENGTH_BUDGET = 12
    SAMPLES = 10**4
    BLOCK_SIZE = 2**18
    # int64 fast paths need every value (and k + n) to stay below this.
    FIXED_WIDTH_LIMIT = 2**62
    # Streaming validity scans of a construction stop being worth it past
    # this many cells; sampled verification then skips the scan.
    SCAN_BUDGET = 10**9
    THREADS = _resolve_threads()
    LOG_LEVEL = "WARNING"


class TestingConfig(Config):
    # Small enough that the refusal paths are reachable from tests without
    # building anything large.
    CELL_BUDGET = 10**6
    PAIR_BUDGET = 10**7
    NODE_BUDGET = 10**6
    BLOCK_SIZE = 2**12
    THREADS = 1


config = {
    "testing": TestingConfig,
    "default": Config,
}

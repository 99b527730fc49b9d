import pytest
from click.testing import CliRunner

from badseq import get_config
from badseq.models import VectorSequence
from badseq.services.construction_service import base_sequence


@pytest.fixture()
def cfg():
    return get_config("testing")


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def base():
    return base_sequence()


def seq_of(*rows, dim=None):
    return VectorSequence.from_rows(rows, dim=dim)


# ---------------------------------------------------------------------------
# Naive reference verifier. Written straight from the definitions and kept
# independent of badseq.services on purpose: the tests compare the real
# checks against these.
# ---------------------------------------------------------------------------

def naive_step(a, b):
    return b == a + 1 or b == 0


def naive_is_valid(rows):
    return all(
        all(naive_step(x, y) for x, y in zip(rows[t], rows[t + 1]))
        for t in range(len(rows) - 1)
    )


def naive_is_cyclic(rows):
    if not naive_is_valid(rows):
        return False
    if not rows:
        return True
    return all(naive_step(x, y) for x, y in zip(rows[-1], rows[0]))


def naive_first_dominating_pair(rows):
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if all(x <= y for x, y in zip(rows[i], rows[j])):
                return i, j
    return None

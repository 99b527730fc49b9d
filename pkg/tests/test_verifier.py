import pytest
from hypothesis import given, settings, strategies as st

from badseq.errors import BudgetExceededError
from badseq.models import Violation, ViolationKind
from badseq.services.construction_service import (
    binary_counter,
    construct,
    index_at,
    make_spec,
)
from badseq.services.verifier_service import (
    check_cyclic,
    check_non_dominating_full,
    check_non_dominating_sampled,
    check_valid,
    sample_sequence,
    scan_spec,
)

from .conftest import (
    naive_first_dominating_pair,
    naive_is_cyclic,
    naive_is_valid,
    seq_of,
)


# --- check_valid / check_cyclic ---

def test_base_sequence_is_valid_and_cyclic(base):
    assert check_valid(base) is None
    assert check_cyclic(base) is None


def test_bad_step_reports_index_and_coordinate():
    violation = check_valid(seq_of((1, 1), (1, 2)))
    assert violation == Violation(ViolationKind.BAD_STEP, 0, 1, 0)


def test_bad_step_reports_the_first_one():
    violation = check_valid(seq_of((0, 0), (1, 1), (2, 0), (2, 1)))
    assert (violation.index_a, violation.index_b, violation.coordinate) == (2, 3, 0)


def test_binary_counter_is_valid():
    assert check_valid(binary_counter(5)) is None


def test_empty_and_singleton_are_vacuously_valid():
    assert check_valid(seq_of(dim=2)) is None
    assert check_cyclic(seq_of(dim=2)) is None
    assert check_valid(seq_of((1, 1))) is None


def test_broken_cycle_on_the_wrap_step():
    violation = check_cyclic(seq_of((0, 2), (1, 0)))
    assert violation == Violation(ViolationKind.BROKEN_CYCLE, 1, 0, 1)


def test_binary_counter_happens_to_be_cyclic():
    assert check_cyclic(binary_counter(3)) is None


def test_singleton_cannot_step_to_itself():
    violation = check_cyclic(seq_of((1, 1)))
    assert violation.kind == ViolationKind.BROKEN_CYCLE


def test_check_cyclic_reports_bad_step_before_the_wrap():
    violation = check_cyclic(seq_of((1, 1), (1, 2)))
    assert violation.kind == ViolationKind.BAD_STEP


# --- full non-domination ---

def test_full_check_passes_construct_6():
    assert check_non_dominating_full(construct(6)) is None


def test_full_check_finds_first_dominating_pair():
    violation = check_non_dominating_full(seq_of((1, 0), (0, 1), (1, 1)))
    assert violation == Violation(ViolationKind.DOMINATING_PAIR, 0, 2)
    assert str(violation) == "dominating-pair 0 2"


def test_planted_equal_vector_dominates(base):
    planted = base.replace(3, (1, 1))
    violation = check_non_dominating_full(planted)
    assert str(violation) == "dominating-pair 0 3"


def test_full_check_is_lexicographic_in_i_then_j():
    # (1,2) <= (1,3) is a later hit; row 0 is scanned first
    seq = seq_of((3, 0), (1, 2), (0, 3), (1, 3), (3, 1))
    violation = check_non_dominating_full(seq)
    assert (violation.index_a, violation.index_b) == (0, 4)


def test_full_check_budget_refusal():
    with pytest.raises(BudgetExceededError):
        check_non_dominating_full(construct(6), pair_budget=1000)


def test_full_check_handles_values_beyond_int64():
    big = 2**70
    assert check_non_dominating_full(seq_of((big, 0), (0, big))) is None
    violation = check_non_dominating_full(seq_of((big, 0), (big + 1, 1)))
    assert (violation.index_a, violation.index_b) == (0, 1)


def test_full_check_same_answer_with_workers():
    planted = construct(4).replace(30, (1, 1, 0, 4))
    single = check_non_dominating_full(planted, workers=1)
    assert single is not None
    assert check_non_dominating_full(planted, workers=3) == single


def test_non_dominating_implies_distinct():
    seq = construct(4)
    assert check_non_dominating_full(seq) is None
    assert len(set(seq)) == len(seq)


# --- Oracle agreement with the naive reference ---

small_sequences = st.integers(min_value=1, max_value=2).flatmap(
    lambda d: st.lists(
        st.lists(st.integers(min_value=0, max_value=8), min_size=d, max_size=d).map(tuple),
        max_size=8,
    ).map(lambda rows: (d, rows))
)


@given(small_sequences)
@settings(max_examples=300)
def test_checks_agree_with_naive_reference(case):
    d, rows = case
    seq = seq_of(*rows, dim=d)
    assert (check_valid(seq) is None) == naive_is_valid(rows)
    assert (check_cyclic(seq) is None) == naive_is_cyclic(rows)
    violation = check_non_dominating_full(seq)
    expected = naive_first_dominating_pair(rows)
    if expected is None:
        assert violation is None
    else:
        assert (violation.index_a, violation.index_b) == expected


@given(small_sequences)
def test_cyclic_sequences_reset_within_one_period(case):
    d, rows = case
    seq = seq_of(*rows, dim=d)
    if len(rows) >= 2 and check_cyclic(seq) is None:
        assert all(value <= len(rows) - 1 for vec in rows for value in vec)


def test_every_single_cell_mutation_is_caught_or_conforming(base):
    for index in range(len(base)):
        for coord in range(base.dim):
            vec = list(base[index])
            vec[coord] += 1
            mutated = base.replace(index, vec)
            caught = (
                check_valid(mutated) is not None
                or check_cyclic(mutated) is not None
                or check_non_dominating_full(mutated) is not None
            )
            rows = list(mutated)
            conforming = naive_is_cyclic(rows) and naive_first_dominating_pair(rows) is None
            assert caught != conforming, (index, coord)


# --- Streaming scan ---

@pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 7])
def test_scan_spec_passes(d, cfg):
    assert scan_spec(make_spec(d), block_size=cfg.BLOCK_SIZE) is None


def test_scan_spec_block_size_does_not_matter():
    spec = make_spec(6)
    assert scan_spec(spec, block_size=1) is None
    assert scan_spec(spec, block_size=37) is None


@pytest.mark.slow
def test_scan_spec_d8():
    assert scan_spec(make_spec(8)) is None


# --- Sampled ---

def test_sampled_covers_every_pair_of_tiny_spec():
    report = check_non_dominating_sampled(make_spec(2), samples=6, seed=1)
    assert report.pairs_checked == 6
    assert report.exhaustive
    assert report.ok


def test_sampled_d8_has_no_violations():
    report = check_non_dominating_sampled(make_spec(8), samples=100_000, seed=7)
    assert report.pairs_checked == 100_000
    assert report.violations == []
    assert report.witness_failures == []


@pytest.mark.slow
def test_sampled_d8_million_pairs():
    report = check_non_dominating_sampled(make_spec(8), samples=1_000_000, seed=7)
    assert report.ok


def test_sampled_is_reproducible():
    spec = make_spec(6)
    first = check_non_dominating_sampled(spec, samples=500, seed=42)
    again = check_non_dominating_sampled(spec, samples=500, seed=42)
    assert first == again
    assert first.summary() == "pairs_checked 500 seed 42 violations 0 witness_failures 0"


def test_sampled_catches_corrupted_construction():
    spec = make_spec(4)

    def without_y(k):
        vec = index_at(spec, k)
        return vec[:3] + (0,)

    report = check_non_dominating_sampled(spec, samples=10_000, seed=3, accessor=without_y)
    assert report.violations
    for violation in report.violations:
        assert violation.index_a < violation.index_b


def test_sample_sequence_on_materialized_input(base):
    assert sample_sequence(base, samples=100, seed=0).ok
    report = sample_sequence(base.replace(3, (1, 1)), samples=100, seed=0)
    assert Violation(ViolationKind.DOMINATING_PAIR, 0, 3) in report.violations

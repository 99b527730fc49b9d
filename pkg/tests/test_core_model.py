import pytest
from hypothesis import given, strategies as st

from badseq.errors import DimensionMismatchError, InvalidVectorError
from badseq.models import (
    VectorSequence,
    exceeding_coordinate,
    first_bad_coordinate,
    leq,
    make_vector,
    step_ok,
    vec_step_ok,
)

from .conftest import seq_of


def test_step_ok_increment():
    assert step_ok(3, 4)


def test_step_ok_reset():
    assert step_ok(3, 0)
    assert step_ok(0, 0)


def test_step_ok_rejects_staying_fixed():
    assert not step_ok(3, 3)


def test_step_ok_rejects_jumps_and_decrements():
    assert not step_ok(3, 5)
    assert not step_ok(3, 2)


def test_vec_step_ok_on_base_sequence_steps():
    assert vec_step_ok((1, 1), (0, 2))
    assert vec_step_ok((0, 2), (1, 0))


def test_vec_step_ok_fails_when_a_coordinate_is_held():
    assert not vec_step_ok((1, 1), (1, 2))
    assert first_bad_coordinate((1, 1), (1, 2)) == 0


def test_vec_step_ok_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        vec_step_ok((1, 1), (0, 2, 3))


def test_leq_examples():
    assert leq((0, 0), (5, 7))
    assert not leq((1, 1), (0, 2))
    assert leq((1, 1), (1, 1))


def test_leq_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        leq((1,), (1, 2))


def test_exceeding_coordinate_is_a_witness():
    assert exceeding_coordinate((1, 1), (0, 2)) == 0
    assert exceeding_coordinate((0, 3), (1, 2)) == 1
    assert exceeding_coordinate((0, 0), (0, 0)) is None


def test_make_vector_rejects_bad_coordinates():
    with pytest.raises(InvalidVectorError):
        make_vector([1, -1])
    with pytest.raises(InvalidVectorError):
        make_vector([True, 0])
    with pytest.raises(InvalidVectorError):
        make_vector([])


def test_coordinates_are_arbitrary_precision():
    big = 10**40
    assert step_ok(big, big + 1)
    assert leq((big,), (big + 1,))


def test_empty_sequence_is_legal():
    seq = VectorSequence(dim=3)
    assert len(seq) == 0
    assert seq.length == 0


def test_sequence_rejects_mixed_dimensions():
    with pytest.raises(DimensionMismatchError):
        seq_of((1, 1), (0, 2, 0))


def test_sequence_coordinate_history():
    seq = seq_of((1, 1), (0, 2), (1, 0), (0, 0))
    assert seq.coordinate(0) == [1, 0, 1, 0]
    assert seq.coordinate(1) == [1, 2, 0, 0]


# --- Properties ---

coords = st.integers(min_value=0, max_value=6)


def vectors(dim):
    return st.lists(coords, min_size=dim, max_size=dim).map(tuple)


same_dim_triples = st.integers(min_value=1, max_value=4).flatmap(
    lambda d: st.tuples(vectors(d), vectors(d), vectors(d))
)


@given(same_dim_triples)
def test_leq_is_a_partial_order(triple):
    u, v, w = triple
    assert leq(u, u)
    if leq(u, v) and leq(v, u):
        assert u == v
    if leq(u, v) and leq(v, w):
        assert leq(u, w)


@given(coords, coords)
def test_step_ok_case_split_is_total(a, b):
    if step_ok(a, b) and b != 0:
        assert b == a + 1


@given(same_dim_triples)
def test_legal_step_grows_by_at_most_one(triple):
    v, w, _ = triple
    if vec_step_ok(v, w):
        assert all(value <= max(v) + 1 for value in w)


@given(
    st.integers(min_value=1, max_value=3).flatmap(
        lambda d: st.tuples(vectors(d), st.lists(st.lists(st.booleans(), min_size=d, max_size=d), max_size=12))
    )
)
def test_valid_sequences_grow_at_most_one_per_step(case):
    start, masks = case
    rows = [start]
    for mask in masks:
        rows.append(tuple(value + 1 if inc else 0 for value, inc in zip(rows[-1], mask)))
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            assert all(b <= a + (j - i) for a, b in zip(rows[i], rows[j]))

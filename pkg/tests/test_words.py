import pytest
from hypothesis import given, strategies as st

from henonshoe.symbolic import CyclicWord, build_graph, periodic_points

E = build_graph("E")
G = build_graph("G")


def test_twelve_points_of_exact_period_four():
    assert len(periodic_points(E, 4, exact=True)) == 12


def test_sixteen_points_of_period_dividing_four():
    assert len(periodic_points(E, 4, exact=False)) == 16


def test_period_one_words():
    assert {w.symbols for w in periodic_points(E, 1)} == {(0,), (1,)}


def test_g_exact_period_two():
    words = {w.as_string() for w in periodic_points(G, 2, exact=True)}
    assert words == {"12", "21"}


def test_g_period_counts_match_transfer_matrix_traces():
    # trace of A^n for the 5-edge adjacency matrix: closed path counts
    counts = {1: 1, 2: 3, 3: 4, 4: 7, 5: 11}
    for n, expected in counts.items():
        assert len(periodic_points(G, n)) == expected


def test_result_is_shift_closed():
    for n in (3, 4, 5):
        pts = periodic_points(E, n, exact=True)
        assert all(w.shift() in pts for w in pts)


def test_inadmissible_word_rejected():
    with pytest.raises(ValueError):
        CyclicWord(G, (1, 1))
    with pytest.raises(ValueError):
        CyclicWord(G, (1,))
    with pytest.raises(ValueError):
        CyclicWord(E, ())


def test_primitive_period_recorded():
    assert CyclicWord(E, (0, 1, 0, 1)).primitive_period == 2
    assert CyclicWord(E, (0, 0, 0, 1)).primitive_period == 4
    assert CyclicWord(E, (1, 1)).primitive_period == 1


@given(st.lists(st.sampled_from([0, 1]), min_size=1, max_size=8))
def test_shift_by_length_is_identity(bits):
    word = CyclicWord(E, tuple(bits))
    assert word.shift(len(bits)) == word


@given(st.lists(st.sampled_from([0, 1]), min_size=1, max_size=8), st.integers(0, 16))
def test_shift_preserves_primitive_period(bits, k):
    word = CyclicWord(E, tuple(bits))
    assert word.shift(k).primitive_period == word.primitive_period

import pytest

import recsort

GOLDEN_INPUT = ["4.5", "0.3", "2.3", "8.8", "7", "9.2", "4.5", "4.3", "8", "3.2"]
GOLDEN_SORTED = ["0.3", "2.3", "3.2", "4.3", "4.5", "4.5", "7.0", "8.0", "8.8", "9.2"]


def test_sort_decimals_golden():
    values, report = recsort.sort_decimals(GOLDEN_INPUT)
    assert values == GOLDEN_SORTED
    assert report.written == 10
    assert report.cells_traversed == 17


def test_sort_integers():
    values, report = recsort.sort_integers([3, 1, 2, 2])
    assert values == [1, 2, 2, 3]
    assert report.written == 4


def test_sort_strings_returns_originals():
    values, _ = recsort.sort_strings(["ba", "ab", "aa", "b"])
    assert values == ["aa", "ab", "b", "ba"]


def test_errors_are_raised():
    with pytest.raises(recsort.Error, match="negative"):
        recsort.sort_decimals(["-3"])
    with pytest.raises(recsort.Error, match="budget"):
        recsort.sort_decimals(["123456789012"])
    with pytest.raises(ValueError):  # recsort.Error derives ValueError
        recsort.sort_integers([-1])


def test_generate_is_deterministic():
    a = recsort.generate(100, 1, 10, 1, 42)
    b = recsort.generate(100, 1, 10, 1, 42)
    assert a == b
    assert a[0] == "7.6"
    assert all(1.0 <= float(v) < 10.0 for v in a)


def test_worst_case_constant():
    c = recsort.worst_case_constant(3)
    assert (c.numerator, c.denominator) == (103, 3)
    assert c.value == pytest.approx(103 / 3)


def test_describe_shapes():
    shape = recsort.describe(1, 10, 2)
    assert shape.count_dims == "10x10x10"
    assert shape.h_min_dims == "10x22"
    assert shape.h_max_dims == "10x11"
    assert shape.cell_count == 1000

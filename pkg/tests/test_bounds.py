import pytest

from mixedcages import ahm_bound, moore_bound


def tree_size_by_levels(r: int, d: int) -> int:
    """Independent oracle: count tree vertices level by level."""
    total = 1
    width = r
    for _ in range(d):
        total += width
        width *= r - 1
    return total


def test_moore_matches_level_oracle():
    for r in range(1, 8):
        for d in range(0, 13):
            assert moore_bound(r, d) == tree_size_by_levels(r, d)


def test_moore_matches_closed_form_for_r_at_least_3():
    # (r(r-1)^d - 2) / (r-2), exact division
    for r in range(3, 9):
        for d in range(0, 13):
            num = r * (r - 1) ** d - 2
            assert num % (r - 2) == 0
            assert moore_bound(r, d) == num // (r - 2)


def test_moore_known_values():
    assert moore_bound(3, 0) == 1
    assert moore_bound(3, 1) == 4
    assert moore_bound(3, 2) == 10
    assert moore_bound(6, 2) == 37


def test_moore_degenerate_degrees():
    # r=2 is a path: 2d+1; r=1 saturates at a single edge
    for d in range(0, 10):
        assert moore_bound(2, d) == 2 * d + 1
    assert moore_bound(1, 0) == 1
    for d in range(1, 6):
        assert moore_bound(1, d) == 2


def test_moore_monotone():
    for r in range(3, 7):
        values = [moore_bound(r, d) for d in range(10)]
        assert all(a < b for a, b in zip(values, values[1:]))
    for d in range(1, 6):
        values = [moore_bound(r, d) for r in range(2, 8)]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_moore_rejects_bad_arguments():
    with pytest.raises(ValueError):
        moore_bound(0, 3)
    with pytest.raises(ValueError):
        moore_bound(3, -1)


def test_moore_overflow_guard():
    with pytest.raises(OverflowError):
        moore_bound(10, 10**9)


def test_ahm_paper_values():
    assert ahm_bound(3, 6) == 30
    assert ahm_bound(6, 6) == 90


def test_ahm_small_values():
    assert ahm_bound(3, 1) == 1
    assert ahm_bound(3, 3) == 6  # depth profile (0, 1, 0) -> 1 + 4 + 1


def test_ahm_summands_are_palindromic():
    for r in range(1, 7):
        for g in range(1, 12):
            summands = [moore_bound(r, min(i, g - 1 - i)) for i in range(g)]
            assert summands == summands[::-1]
            assert ahm_bound(r, g) == sum(summands)


def test_ahm_rejects_bad_arguments():
    with pytest.raises(ValueError):
        ahm_bound(0, 6)
    with pytest.raises(ValueError):
        ahm_bound(3, 0)

import pytest

from counting import classify_fan_triples, fan_parallel_breakdown, fan_parallel_count
from utils import PreconditionError


def test_four_apex_lines_three_parallels():
    breakdown = fan_parallel_breakdown(4, 3)
    assert breakdown.terms() == "35-4-1-12"
    assert breakdown.triangles == 18
    assert fan_parallel_count(4, 3) == 18


@pytest.mark.parametrize("p, r, expected", [(2, 1, 1), (3, 2, 6), (3, 1, 3)])
def test_small_figures(p, r, expected):
    assert fan_parallel_count(p, r) == expected


def test_brute_force_classifier_agrees():
    for p in range(2, 7):
        for r in range(1, 6):
            assert classify_fan_triples(p, r) == fan_parallel_breakdown(p, r)


@pytest.mark.parametrize("p, r", [(1, 1), (2, 0), (2.0, 1)])
def test_preconditions(p, r):
    with pytest.raises(PreconditionError):
        fan_parallel_breakdown(p, r)

import pytest

from counting import (
    CountReport,
    DProvenance,
    binom3,
    generic_count,
    symmetric_count,
    theorem1_count,
    theorem2_closed_form,
    theorem2_count,
    theorem2_prime_form,
    two_vertex_count,
)
from counting.formulas import exact_quotient
from number_theory import count_concurrencies, primes_up_to
from utils import ConsistencyError, PreconditionError


@pytest.mark.parametrize("a, b, c, d, expected", [
    (1, 1, 1, 1, 16),
    (1, 1, 1, 0, 17),
    (3, 3, 0, 0, 64),
    (2, 2, 2, 0, 72),
    (3, 3, 3, 7, 183),
    (5, 5, 5, 13, 698),
    (0, 0, 0, 0, 1),
])
def test_theorem1_count(a, b, c, d, expected):
    assert theorem1_count(a, b, c, d).triangle_count == expected


def test_missing_vertex_forces_structural_zero():
    report = theorem1_count(3, 3, 0, 0, provenance=DProvenance.GEOMETRIC)
    assert report.d_provenance is DProvenance.STRUCTURAL_ZERO
    with pytest.raises(PreconditionError):
        theorem1_count(3, 3, 0, 1)


def test_d_bounds():
    with pytest.raises(PreconditionError):
        theorem1_count(1, 1, 1, 2)
    with pytest.raises(PreconditionError):
        theorem1_count(1, 1, 1, -1)
    with pytest.raises(PreconditionError):
        theorem1_count(1, "1", 1, 0)


def test_report_dict_uses_decimal_strings():
    report = theorem1_count(1, 1, 1, 1, provenance=DProvenance.GEOMETRIC)
    assert report.to_dict() == {
        "a": "1", "b": "1", "c": "1", "d": "1",
        "d_provenance": "geometric",
        "triangle_count": "16",
    }
    checked = report.with_oracle(16).to_dict()
    assert checked["oracle_count"] == "16"
    assert checked["oracle_agrees"] is True
    assert isinstance(report.with_oracle(15), CountReport)
    assert report.with_oracle(15).oracle_agrees is False


def test_binomials_and_exact_division():
    assert [binom3(n) for n in range(7)] == [0, 0, 0, 1, 4, 10, 20]
    with pytest.raises(ConsistencyError):
        exact_quotient(7, 2, "test")


def test_cube_law():
    for n in range(21):
        assert two_vertex_count(n, n) == (n + 1) ** 3


def test_two_vertex_matches_general_count():
    for a in range(11):
        for b in range(11):
            assert two_vertex_count(a, b) == theorem1_count(a, b, 0, 0).triangle_count


def test_symmetric_family():
    assert symmetric_count(0) == 3
    assert symmetric_count(3) == 96
    for n in range(21):
        assert symmetric_count(n) == theorem1_count(n, n, 1, n).triangle_count


def test_generic_count():
    assert generic_count(1) == 17
    assert generic_count(2) == 72


@pytest.mark.parametrize("p, m", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)])
def test_theorem2_odd_prime_powers(p, m):
    q = p ** m
    assert count_concurrencies(q) == 0
    report = theorem2_count(p, m)
    assert report.d == 0
    assert report.triangle_count == (8 * q ** 3 - 9 * q ** 2 + 3 * q) // 2


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_theorem2_powers_of_two(m):
    q = 2 ** m
    assert count_concurrencies(q) == 3 * q - 5
    report = theorem2_count(2, m)
    assert report.d == 3 * q - 5
    assert report.triangle_count == (8 * q ** 3 - 9 * q ** 2 - 3 * q + 10) // 2


def test_theorem2_known_values():
    assert theorem2_count(3, 1).triangle_count == 72
    assert theorem2_count(2, 2).triangle_count == 183
    assert theorem2_count(2, 2).d == 7


def test_theorem2_preconditions():
    with pytest.raises(PreconditionError):
        theorem2_count(4, 1)
    with pytest.raises(PreconditionError):
        theorem2_count(3, 0)


def test_prime_form_matches_closed_form():
    for p in primes_up_to(31)[1:]:
        assert theorem2_prime_form(p) == theorem2_closed_form(p, p)

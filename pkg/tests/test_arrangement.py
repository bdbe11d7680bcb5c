import random
from fractions import Fraction

import pytest

from geometry import (
    CevianConfig,
    Point2,
    build_arrangement,
    ceva_concurrent_triples,
    ceva_product,
    concurrency_points,
    equal_division_config,
    mirror_symmetric_config,
    random_config,
    rational_pool,
)
from utils import (
    ALTERNATE_TRIANGLE,
    ConfigValidationError,
    GeometryError,
    PreconditionError,
)

F = Fraction


@pytest.mark.parametrize("feet", [
    (F(0),),
    (F(1),),
    (F(3, 2),),
    (F(2, 3), F(1, 3)),
    (F(1, 2), F(1, 2)),
])
def test_config_rejects_invalid_feet(feet):
    with pytest.raises(ConfigValidationError):
        CevianConfig(feet_from_A=feet)


def test_config_error_names_offending_entry():
    with pytest.raises(ConfigValidationError) as excinfo:
        CevianConfig(feet_from_B=(F(1, 3), F(5, 4)))
    assert "feet_from_B[1]" in excinfo.value.context["entry"]


def test_from_feet_sorts_and_rejects_repeats():
    config = CevianConfig.from_feet(["2/3", "1/3"], [F(1, 2)], [])
    assert config.feet_from_A == (F(1, 3), F(2, 3))
    assert config.counts == (2, 1, 0)
    assert config.to_dict() == {"feet_a": ["1/3", "2/3"], "feet_b": ["1/2"], "feet_c": []}
    with pytest.raises(ConfigValidationError):
        CevianConfig.from_feet(["1/2", "2/4"])


def test_concurrency_points_ignore_listing_order():
    rng = random.Random(7)
    configs = [equal_division_config(4), equal_division_config(6)]
    configs += [random_config(rng) for _ in range(20)]
    for config in configs:
        shuffled = CevianConfig.from_feet(
            reversed(config.feet_from_A), reversed(config.feet_from_B), reversed(config.feet_from_C))
        assert shuffled == config
        expected = concurrency_points(build_arrangement(config))
        found = concurrency_points(build_arrangement(shuffled))
        assert [p.location for p in found] == [p.location for p in expected]
        assert [p.feet_indices for p in found] == [p.feet_indices for p in expected]


def test_segment_ids_and_labels():
    arr = build_arrangement(equal_division_config(2))
    assert arr.segment_count == 6
    assert [arr.label(i) for i in range(6)] == ["AB", "BC", "CA", "A1", "B1", "C1"]
    assert arr.cevian_ids("A") == (3,)
    assert arr.cevian_ids("C") == (5,)
    assert arr.vertex_at(Point2(0, 1)) == "C"
    assert arr.vertex_at(Point2(1, 1)) is None


def test_cevian_feet_follow_traversal_direction():
    arr = build_arrangement(CevianConfig.from_feet(["1/4"], ["1/4"], ["1/4"]))
    a_cevian, b_cevian, c_cevian = arr.segments[3:]
    assert a_cevian.q == Point2(F(3, 4), F(1, 4))   # on BC, from B toward C
    assert b_cevian.q == Point2(0, F(3, 4))         # on CA, from C toward A
    assert c_cevian.q == Point2(F(1, 4), 0)         # on AB, from A toward B


def test_medians_meet_at_centroid():
    arr = build_arrangement(equal_division_config(2))
    points = concurrency_points(arr, cross_check=True)
    assert len(points) == 1
    assert points[0].location == Point2(F(1, 3), F(1, 3))
    assert points[0].cevian_ids == (3, 4, 5)
    assert points[0].feet_indices == (0, 0, 0)


def test_opening_variant_has_no_concurrency():
    config = CevianConfig.from_feet(["1/2"], ["1/2"], ["1/3"])
    assert concurrency_points(build_arrangement(config), cross_check=True) == []


def test_ceva_product():
    assert ceva_product(F(1, 2), F(1, 2), F(1, 2)) == 1
    assert ceva_product(F(1, 3), F(1, 2), F(2, 3)) == 1
    assert ceva_product(F(1, 2), F(1, 2), F(1, 3)) == F(1, 2)


def test_equal_division_feet():
    config = equal_division_config(4)
    assert config.feet_from_A == (F(1, 4), F(1, 2), F(3, 4))
    assert config.counts == (3, 3, 3)
    with pytest.raises(PreconditionError):
        equal_division_config(1)


def test_equal_division_four_has_seven_concurrencies():
    points = concurrency_points(build_arrangement(equal_division_config(4)), cross_check=True)
    assert len(points) == 7


@pytest.mark.parametrize("feet", [[F(1, 3)], [F(1, 4), F(2, 3)], [F(1, 5), F(1, 2), F(3, 4)]])
def test_mirror_symmetric_config_has_one_concurrency_per_pair(feet):
    config = mirror_symmetric_config(feet)
    assert config.counts == (len(feet), len(feet), 1)
    assert config.feet_from_C == (F(1, 2),)
    assert len(concurrency_points(build_arrangement(config), cross_check=True)) == len(feet)


def test_alternate_triangle_keeps_concurrencies():
    config = equal_division_config(4)
    reference = concurrency_points(build_arrangement(config))
    alternate = concurrency_points(build_arrangement(config, vertices=ALTERNATE_TRIANGLE))
    assert [p.feet_indices for p in reference] == [p.feet_indices for p in alternate]


def test_degenerate_triangle_rejected():
    with pytest.raises(GeometryError):
        build_arrangement(equal_division_config(2), vertices=((0, 0), (1, 1), (2, 2)))


def test_random_config_is_seeded_and_bounded():
    first = [random_config(random.Random(7)) for _ in range(3)]
    second = [random_config(random.Random(7)) for _ in range(3)]
    assert first == second

    rng = random.Random(11)
    pool = set(rational_pool(12))
    for _ in range(50):
        config = random_config(rng, max_total=9, max_denominator=12)
        assert sum(config.counts) <= 9
        assert set(config.feet_from_A + config.feet_from_B + config.feet_from_C) <= pool


def test_geometric_and_ceva_concurrencies_agree_on_random_configs():
    rng = random.Random(2024)
    for _ in range(40):
        config = random_config(rng)
        points = concurrency_points(build_arrangement(config), cross_check=True)
        assert [p.feet_indices for p in points] == ceva_concurrent_triples(config)

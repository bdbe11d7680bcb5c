# init for geometry folder containing rational_geom.py, arrangement.py, and configs.py
from .rational_geom import (
    Rational,
    Point2,
    Segment,
    SegmentLabel,
    as_rational,
    parse_rational,
    format_rational,
    cross,
    orientation,
    point_on_segment,
    segment_intersection,
    triangle_contains_strictly,
)
from .arrangement import (
    CevianConfig,
    Arrangement,
    ConcurrencyPoint,
    build_arrangement,
    concurrency_points,
    ceva_product,
    ceva_concurrent_triples,
    equal_division_config,
    mirror_symmetric_config,
    rational_pool,
    random_config,
)
from .configs import parse_config_text, load_config_file

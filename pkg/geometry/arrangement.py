"""
Cevian configurations and their exact realization in a reference triangle.

Foot parameters follow fixed traversal directions so that the three Ceva
ratios multiply to exactly 1 at a concurrency:

    A-cevian foot t on BC:  (1 - t) * B + t * C   ->  BD/DC = t / (1 - t)
    B-cevian foot t on CA:  (1 - t) * C + t * A   ->  CE/EA = t / (1 - t)
    C-cevian foot t on AB:  (1 - t) * A + t * B   ->  AF/FB = t / (1 - t)
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .rational_geom import (
    Point2,
    Segment,
    SegmentLabel,
    RationalLike,
    as_rational,
    format_rational,
    orientation,
    point_on_segment,
    segment_intersection,
    triangle_contains_strictly,
)
from utils import (
    logger,
    validate_operation,
    int_at_least,
    ConfigValidationError,
    ConsistencyError,
    GeometryError,
    REFERENCE_TRIANGLE,
    SIDE_NAMES,
    VERTEX_NAMES,
    RANDOM_MAX_TOTAL_CEVIANS,
    RANDOM_MAX_DENOMINATOR,
)

FeetTuple = Tuple[Fraction, ...]


def _validate_feet(feet: Sequence[RationalLike], field_name: str) -> FeetTuple:
    values = []
    for position, raw in enumerate(feet):
        entry = f"{field_name}[{position}]={raw}"
        value = as_rational(raw)
        if not (0 < value < 1):
            raise ConfigValidationError(
                f"Foot parameter {entry} must lie strictly between 0 and 1", entry=entry)
        if values and value <= values[-1]:
            problem = "duplicates" if value == values[-1] else "is smaller than"
            raise ConfigValidationError(
                f"Foot parameter {entry} {problem} the previous foot "
                f"{format_rational(values[-1])}; feet must be distinct and increasing",
                entry=entry)
        values.append(value)
    return tuple(values)


@dataclass(frozen=True)
class CevianConfig:
    """Foot parameters on BC (from A), CA (from B) and AB (from C), strictly increasing."""
    feet_from_A: FeetTuple = ()
    feet_from_B: FeetTuple = ()
    feet_from_C: FeetTuple = ()

    def __post_init__(self):
        object.__setattr__(self, "feet_from_A", _validate_feet(self.feet_from_A, "feet_from_A"))
        object.__setattr__(self, "feet_from_B", _validate_feet(self.feet_from_B, "feet_from_B"))
        object.__setattr__(self, "feet_from_C", _validate_feet(self.feet_from_C, "feet_from_C"))

    @classmethod
    def from_feet(
        cls,
        feet_a: Iterable[RationalLike] = (),
        feet_b: Iterable[RationalLike] = (),
        feet_c: Iterable[RationalLike] = (),
    ) -> "CevianConfig":
        """Build from unordered feet; repeated feet are rejected, not collapsed."""
        def canonical(feet, field_name):
            values = [as_rational(value) for value in feet]
            if len(set(values)) != len(values):
                repeated = sorted({format_rational(v) for v in values if values.count(v) > 1})
                raise ConfigValidationError(
                    f"Repeated foot parameters in {field_name}: {', '.join(repeated)}",
                    entry=field_name)
            return tuple(sorted(values))

        return cls(
            canonical(feet_a, "feet_from_A"),
            canonical(feet_b, "feet_from_B"),
            canonical(feet_c, "feet_from_C"),
        )

    @property
    def a(self) -> int:
        return len(self.feet_from_A)

    @property
    def b(self) -> int:
        return len(self.feet_from_B)

    @property
    def c(self) -> int:
        return len(self.feet_from_C)

    @property
    def counts(self) -> Tuple[int, int, int]:
        return self.a, self.b, self.c

    def feet(self, vertex: str) -> FeetTuple:
        return {"A": self.feet_from_A, "B": self.feet_from_B, "C": self.feet_from_C}[vertex]

    def to_dict(self) -> Dict[str, List[str]]:
        return {
            "feet_a": [format_rational(t) for t in self.feet_from_A],
            "feet_b": [format_rational(t) for t in self.feet_from_B],
            "feet_c": [format_rational(t) for t in self.feet_from_C],
        }


@dataclass(frozen=True)
class ConcurrencyPoint:
    location: Point2
    cevian_ids: Tuple[int, int, int]       # segment ids of the A-, B- and C-cevian
    feet_indices: Tuple[int, int, int]     # 0-based position of each cevian in its foot list


@dataclass(frozen=True)
class Arrangement:
    A: Point2
    B: Point2
    C: Point2
    segments: Tuple[Segment, ...]
    config: CevianConfig
    _ids_by_vertex: Dict[str, Tuple[int, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        ids = {vertex: tuple(
            index for index, segment in enumerate(self.segments)
            if not segment.label.is_side and segment.label.name == vertex)
            for vertex in VERTEX_NAMES}
        object.__setattr__(self, "_ids_by_vertex", ids)

    @property
    def vertices(self) -> Tuple[Point2, Point2, Point2]:
        return self.A, self.B, self.C

    @property
    def segment_count(self) -> int:
        return len(self.segments)

    def vertex(self, name: str) -> Point2:
        return {"A": self.A, "B": self.B, "C": self.C}[name]

    def cevian_ids(self, vertex: str) -> Tuple[int, ...]:
        return self._ids_by_vertex[vertex]

    def vertex_at(self, point: Point2) -> Optional[str]:
        for name, vertex in zip(VERTEX_NAMES, self.vertices):
            if point == vertex:
                return name
        return None

    def label(self, segment_id: int) -> str:
        return str(self.segments[segment_id].label)


def _cevian_foot(vertex: str, t: Fraction, A: Point2, B: Point2, C: Point2) -> Point2:
    if vertex == "A":
        return B.lerp(C, t)
    if vertex == "B":
        return C.lerp(A, t)
    return A.lerp(B, t)


def build_arrangement(
    config: CevianConfig,
    vertices: Sequence[Sequence[RationalLike]] = REFERENCE_TRIANGLE,
) -> Arrangement:
    """
    Realize the three sides plus every cevian as exact segments.

    Segment ids: 0..2 are sides AB, BC, CA; then A-, B- and C-cevians in
    foot order.
    """
    if not isinstance(config, CevianConfig):
        raise ConfigValidationError(f"Expected CevianConfig, got {type(config).__name__}")

    A, B, C = (Point2(*vertex) for vertex in vertices)
    if orientation(A, B, C) == 0:
        raise GeometryError(f"Degenerate reference triangle {A}, {B}, {C}")

    segments = [
        Segment(A, B, SegmentLabel.side(SIDE_NAMES[0])),
        Segment(B, C, SegmentLabel.side(SIDE_NAMES[1])),
        Segment(C, A, SegmentLabel.side(SIDE_NAMES[2])),
    ]
    origins = {"A": A, "B": B, "C": C}
    for vertex in VERTEX_NAMES:
        for index, t in enumerate(config.feet(vertex)):
            foot = _cevian_foot(vertex, t, A, B, C)
            segments.append(Segment(origins[vertex], foot, SegmentLabel.cevian(vertex, index)))

    arrangement = Arrangement(A, B, C, tuple(segments), config)
    logger.debug(
        f"Arrangement built with a={config.a} b={config.b} c={config.c}: "
        f"{arrangement.segment_count} segments")
    return arrangement


def concurrency_points(arr: Arrangement, cross_check: bool = False) -> List[ConcurrencyPoint]:
    """
    Interior points where one cevian from each vertex meet; d is the list length.

    Each (A-cevian, B-cevian) crossing is tested against every C-cevian.
    Results are ordered by (A index, B index, C index).
    """
    points = []
    for i, a_id in enumerate(arr.cevian_ids("A")):
        a_segment = arr.segments[a_id]
        for j, b_id in enumerate(arr.cevian_ids("B")):
            crossing = segment_intersection(a_segment, arr.segments[b_id])
            if crossing is None or not triangle_contains_strictly(arr.A, arr.B, arr.C, crossing):
                raise GeometryError(
                    f"Cevians {arr.label(a_id)} and {arr.label(b_id)} do not cross inside the triangle")

            for k, c_id in enumerate(arr.cevian_ids("C")):
                if point_on_segment(crossing, arr.segments[c_id]):
                    points.append(ConcurrencyPoint(crossing, (a_id, b_id, c_id), (i, j, k)))
                    # two C-cevians share only the vertex C
                    break

    logger.debug(f"Found {len(points)} interior concurrency points")

    if cross_check:
        expected = ceva_concurrent_triples(arr.config)
        found = [point.feet_indices for point in points]
        if found != expected:
            raise ConsistencyError(
                f"Geometric concurrencies {found} disagree with Ceva ratio triples {expected}",
                context={"config": arr.config.to_dict()})
        logger.debug("Ceva ratio cross-check passed")

    return points


def ceva_product(t_a: Fraction, t_b: Fraction, t_c: Fraction) -> Fraction:
    """(BD/DC)(CE/EA)(AF/FB) for the given foot parameters."""
    product = Fraction(1)
    for t in (t_a, t_b, t_c):
        product *= t / (1 - t)
    return product


def ceva_concurrent_triples(config: CevianConfig) -> List[Tuple[int, int, int]]:
    """Foot index triples whose Ceva product is exactly 1."""
    return [
        (i, j, k)
        for i, t_a in enumerate(config.feet_from_A)
        for j, t_b in enumerate(config.feet_from_B)
        for k, t_c in enumerate(config.feet_from_C)
        if ceva_product(t_a, t_b, t_c) == 1
    ]


@validate_operation(inputs={'n': (int_at_least(2), 'n must be an integer >= 2')})
def equal_division_config(n: int) -> CevianConfig:
    """n - 1 cevians per vertex with feet at i/n."""
    feet = tuple(Fraction(i, n) for i in range(1, n))
    return CevianConfig(feet, feet, feet)


def mirror_symmetric_config(feet: Iterable[RationalLike]) -> CevianConfig:
    """
    A-feet T, their mirror twins 1 - t from B, and the C-median.

    The affine reflection fixing C and swapping A and B carries the B->C foot
    t onto the C->A foot 1 - t, so each twin pair meets the median.
    """
    feet = [as_rational(t) for t in feet]
    return CevianConfig.from_feet(feet, [1 - t for t in feet], [Fraction(1, 2)])


def rational_pool(max_denominator: int = RANDOM_MAX_DENOMINATOR) -> List[Fraction]:
    """All distinct fractions in (0, 1) with denominator <= max_denominator, ascending."""
    return sorted({Fraction(p, q) for q in range(2, max_denominator + 1) for p in range(1, q)})


def random_config(
    rng: random.Random,
    max_total: int = RANDOM_MAX_TOTAL_CEVIANS,
    max_denominator: int = RANDOM_MAX_DENOMINATOR,
) -> CevianConfig:
    """Random valid config with a + b + c <= max_total, deterministic for a seeded rng."""
    pool = rational_pool(max_denominator)
    total = rng.randint(0, max_total)
    cuts = sorted(rng.randint(0, total) for _ in range(2))
    a, b, c = cuts[0], cuts[1] - cuts[0], total - cuts[1]
    return CevianConfig.from_feet(rng.sample(pool, a), rng.sample(pool, b), rng.sample(pool, c))

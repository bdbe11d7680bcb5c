"""
Brute-force triangle enumeration over every triple of segments.

Every pair of segments in a cevian arrangement meets, so a triple either
bounds a triangle (three distinct pairwise intersection points) or all
three segments pass through one point: a vertex or an interior
concurrency.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .formulas import CountReport, DProvenance, binom3, theorem1_count
from geometry import (
    Arrangement,
    CevianConfig,
    Point2,
    build_arrangement,
    concurrency_points,
    segment_intersection,
)
from utils import (
    logger,
    ordered_map,
    affine_check_enabled,
    max_segments,
    ConsistencyError,
    GeometryError,
    OracleLimitError,
    PreconditionError,
    ALTERNATE_TRIANGLE,
    REFERENCE_TRIANGLE,
    VERTEX_NAMES,
)

IntersectionTable = List[List[Optional[Point2]]]
Triple = Tuple[int, int, int]


class TripleClass(Enum):
    TRIANGLE = "triangle"
    CONCURRENT_AT_VERTEX = "concurrent-at-vertex"
    CONCURRENT_INTERIOR = "concurrent-interior"


@dataclass
class TriangleTally:
    triangles: int = 0
    at_vertex: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in VERTEX_NAMES})
    interior: int = 0

    def total(self) -> int:
        return self.triangles + sum(self.at_vertex.values()) + self.interior

    def merge(self, other: "TriangleTally") -> "TriangleTally":
        self.triangles += other.triangles
        for name in VERTEX_NAMES:
            self.at_vertex[name] += other.at_vertex[name]
        self.interior += other.interior
        return self


@dataclass
class OracleResult:
    count: int
    tally: TriangleTally
    triples: Optional[List[Triple]] = None


def intersection_table(arr: Arrangement) -> IntersectionTable:
    """Pairwise closed intersections; every pair of distinct segments must meet."""
    size = arr.segment_count
    table: IntersectionTable = [[None] * size for _ in range(size)]
    for first, second in combinations(range(size), 2):
        point = segment_intersection(arr.segments[first], arr.segments[second])
        if point is None:
            raise GeometryError(
                f"Segments {arr.label(first)} and {arr.label(second)} do not meet; "
                f"not a valid cevian arrangement")
        table[first][second] = table[second][first] = point
    return table


def _classify(arr: Arrangement, triple: Triple, table: IntersectionTable) -> Tuple[TripleClass, Optional[str]]:
    first, second, third = triple
    points = (table[first][second], table[first][third], table[second][third])
    distinct = set(points)

    if len(distinct) == 3:
        return TripleClass.TRIANGLE, None
    if len(distinct) != 1:
        raise ConsistencyError(
            f"Triple {[arr.label(index) for index in triple]} has two coincident intersections "
            f"but not three: {[str(point) for point in points]}")

    vertex = arr.vertex_at(points[0])
    if vertex is not None:
        return TripleClass.CONCURRENT_AT_VERTEX, vertex
    return TripleClass.CONCURRENT_INTERIOR, None


def _validate_triple(arr: Arrangement, triple: Sequence[int]) -> Triple:
    ids = tuple(triple)
    if len(ids) != 3 or len(set(ids)) != 3:
        raise PreconditionError(f"Expected three distinct segment ids, got {ids}", parameter="triple")
    if not all(isinstance(index, int) and 0 <= index < arr.segment_count for index in ids):
        raise PreconditionError(
            f"Segment ids {ids} out of range 0..{arr.segment_count - 1}", parameter="triple")
    return tuple(sorted(ids))


def classify_triple(arr: Arrangement, triple: Sequence[int], table: IntersectionTable = None) -> TripleClass:
    triple = _validate_triple(arr, triple)
    if table is None:
        table = intersection_table(arr)
    return _classify(arr, triple, table)[0]


def _enumerate_from(task: Tuple[Arrangement, IntersectionTable, int, bool]) -> Tuple[TriangleTally, List[Triple]]:
    """All triples whose smallest id is first."""
    arr, table, first, collect = task
    tally = TriangleTally()
    triples = []
    for second in range(first + 1, arr.segment_count):
        for third in range(second + 1, arr.segment_count):
            kind, vertex = _classify(arr, (first, second, third), table)
            if kind is TripleClass.TRIANGLE:
                tally.triangles += 1
                if collect:
                    triples.append((first, second, third))
            elif kind is TripleClass.CONCURRENT_AT_VERTEX:
                tally.at_vertex[vertex] += 1
            else:
                tally.interior += 1
    return tally, triples


def enumerate_triangles(
    arr: Arrangement,
    collect: bool = False,
    force: bool = False,
    workers: int = 1,
) -> OracleResult:
    """
    Count triangles by classifying all C(a+b+c+3, 3) segment triples.

    Triples are partitioned by their smallest segment id; partial tallies
    are summed and triple lists concatenated in id order, so the result does
    not depend on workers. Triple lists are lexicographic.
    """
    limit = max_segments()
    if arr.segment_count > limit:
        if not force:
            raise OracleLimitError(arr.segment_count, limit)
        logger.warning(f"Oracle guard rail of {limit} segments overridden for {arr.segment_count} segments")

    table = intersection_table(arr)
    tasks = [(arr, table, first, collect) for first in range(arr.segment_count)]
    partials = ordered_map(_enumerate_from, tasks, workers=workers)

    tally = TriangleTally()
    triples: List[Triple] = []
    for partial_tally, partial_triples in partials:
        tally.merge(partial_tally)
        triples.extend(partial_triples)

    expected_total = binom3(arr.segment_count)
    if tally.total() != expected_total:
        raise ConsistencyError(
            f"Classified {tally.total()} triples, expected C({arr.segment_count},3)={expected_total}")

    logger.info(
        f"Oracle: {tally.triangles} triangles, vertex triples {tally.at_vertex}, "
        f"interior concurrencies {tally.interior}")
    return OracleResult(tally.triangles, tally, triples if collect else None)


def verify_config(
    config: CevianConfig,
    force: bool = False,
    workers: int = 1,
    report: CountReport = None,
) -> CountReport:
    """
    Formula count plus the oracle count and agreement flag.

    Without a precomputed report, d is taken from the geometry.
    """
    arr = build_arrangement(config)
    if report is None:
        d = len(concurrency_points(arr, cross_check=True))
        report = theorem1_count(config.a, config.b, config.c, d, provenance=DProvenance.GEOMETRIC)
    oracle = enumerate_triangles(arr, force=force, workers=workers)
    report = report.with_oracle(oracle.count)

    if not report.oracle_agrees:
        raise ConsistencyError(
            f"Formula count {report.triangle_count} and oracle count {oracle.count} disagree",
            context={"config": config.to_dict(), "report": report.to_dict()})
    if affine_check_enabled():
        verify_affine_invariance(config, force=force, workers=workers)
    return report


@dataclass(frozen=True)
class AffineCheck:
    reference_d: int
    alternate_d: int
    reference_count: int
    alternate_count: int

    @property
    def agrees(self) -> bool:
        return self.reference_d == self.alternate_d and self.reference_count == self.alternate_count


def verify_affine_invariance(
    config: CevianConfig,
    alternate=ALTERNATE_TRIANGLE,
    force: bool = False,
    workers: int = 1,
) -> AffineCheck:
    """Rebuild on a second rational triangle; d and the oracle count must not change."""
    results = []
    for vertices in (REFERENCE_TRIANGLE, alternate):
        arr = build_arrangement(config, vertices=vertices)
        results.append((len(concurrency_points(arr)), enumerate_triangles(arr, force=force, workers=workers).count))

    check = AffineCheck(results[0][0], results[1][0], results[0][1], results[1][1])
    if not check.agrees:
        raise ConsistencyError(
            f"Affine invariance failed: {check}", context={"config": config.to_dict()})
    logger.debug(f"Affine invariance holds: d={check.reference_d} count={check.reference_count}")
    return check

"""
Triangles in a fan-and-parallels figure: p lines through an apex (the two
sides among them) crossed by r lines parallel to the base (the base among
them).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List

from .formulas import binom2, binom3
from geometry import Point2, Segment, SegmentLabel, segment_intersection
from utils import logger, validate_operation, int_at_least, ConsistencyError

APEX = Point2(0, 1)


@dataclass(frozen=True)
class FanBreakdown:
    total: int
    apex_concurrent: int
    all_parallel: int
    two_parallel_one_apex: int

    @property
    def triangles(self) -> int:
        return self.total - self.apex_concurrent - self.all_parallel - self.two_parallel_one_apex

    def terms(self) -> str:
        return f"{self.total}-{self.apex_concurrent}-{self.all_parallel}-{self.two_parallel_one_apex}"


FAN_INPUTS = {
    'p_apex': (int_at_least(2), 'p_apex must be an integer >= 2 (both sides pass through the apex)'),
    'r_parallel': (int_at_least(1), 'r_parallel must be an integer >= 1 (the base is a parallel)'),
}


@validate_operation(inputs=FAN_INPUTS)
def fan_parallel_breakdown(p_apex: int, r_parallel: int) -> FanBreakdown:
    """Overcount all line triples, then drop apex triples, parallel triples and
    triples holding two parallels."""
    return FanBreakdown(
        total=binom3(p_apex + r_parallel),
        apex_concurrent=binom3(p_apex),
        all_parallel=binom3(r_parallel),
        two_parallel_one_apex=binom2(r_parallel) * p_apex,
    )


def fan_parallel_count(p_apex: int, r_parallel: int) -> int:
    return fan_parallel_breakdown(p_apex, r_parallel).triangles


def fan_figure(p_apex: int, r_parallel: int) -> List[Segment]:
    """Apex (0,1) over base (0,0)-(1,0); apex lines to x = k/(p-1), parallels at y = l/r."""
    segments = []
    for k in range(p_apex):
        foot = Point2(Fraction(k, p_apex - 1), 0)
        segments.append(Segment(APEX, foot, SegmentLabel.cevian("P", k)))
    for level in range(r_parallel):
        height = Fraction(level, r_parallel)
        segments.append(Segment(Point2(0, height), Point2(1 - height, height),
                                SegmentLabel.cevian("H", level)))
    return segments


@validate_operation(inputs=FAN_INPUTS)
def classify_fan_triples(p_apex: int, r_parallel: int) -> FanBreakdown:
    """Brute-force classification of every line triple of the exact figure."""
    segments = fan_figure(p_apex, r_parallel)
    apex_concurrent = all_parallel = two_parallel = total = 0

    for triple in combinations(segments, 3):
        total += 1
        points = [segment_intersection(s, t) for s, t in combinations(triple, 2)]
        missing = sum(point is None for point in points)

        if missing == 0:
            if len(set(points)) == 3:
                continue
            if len(set(points)) == 1 and points[0] == APEX:
                apex_concurrent += 1
                continue
        elif missing == 3:
            all_parallel += 1
            continue
        elif missing == 1:
            two_parallel += 1
            continue

        raise ConsistencyError(
            f"Unclassifiable triple {[str(s.label) for s in triple]} with intersections "
            f"{[str(point) for point in points]}")

    breakdown = FanBreakdown(total, apex_concurrent, all_parallel, two_parallel)
    logger.debug(f"Fan figure p={p_apex} r={r_parallel}: {breakdown.terms()} -> {breakdown.triangles}")
    return breakdown

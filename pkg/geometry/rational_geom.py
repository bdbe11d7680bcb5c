"""
Exact rational 2-D primitives.

Every coordinate is a fractions.Fraction, which keeps arbitrary-precision
integer parts in lowest terms with a positive denominator. No predicate in
this module uses a tolerance.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as RationalNumber
from typing import Optional, Union

from utils import ConfigValidationError, OverlappingSegmentsError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

SIDE = "side"
CEVIAN = "cevian"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "num/den" text to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ConfigValidationError(f"Boolean is not a rational value: {value!r}", entry=str(value))
    if isinstance(value, (int, RationalNumber)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ConfigValidationError(
        f"Unsupported rational value {value!r} of type {type(value).__name__}; floats are not exact",
        entry=str(value))


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or an integer string into an exact Fraction."""
    cleaned = str(text).strip().strip('"').strip("'").strip()
    if not cleaned:
        raise ConfigValidationError("Empty fraction", entry=text)

    if "/" in cleaned:
        numerator_text, _, denominator_text = cleaned.partition("/")
    else:
        numerator_text, denominator_text = cleaned, "1"

    try:
        numerator = int(numerator_text.strip())
        denominator = int(denominator_text.strip())
    except ValueError:
        raise ConfigValidationError(
            f"Invalid fraction {text!r}: expected numerator/denominator integers", entry=text)

    if denominator == 0:
        raise ConfigValidationError(f"Invalid fraction {text!r}: zero denominator", entry=text)

    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


@dataclass(frozen=True, order=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, factor: RationalLike) -> "Point2":
        factor = as_rational(factor)
        return Point2(self.x * factor, self.y * factor)

    def lerp(self, other: "Point2", t: RationalLike) -> "Point2":
        """(1 - t) * self + t * other"""
        t = as_rational(t)
        return Point2(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


@dataclass(frozen=True, order=True)
class SegmentLabel:
    """Side AB/BC/CA, or the index-th cevian (0-based, canonical order) from a vertex."""
    kind: str
    name: str
    index: int = 0

    @classmethod
    def side(cls, name: str) -> "SegmentLabel":
        return cls(SIDE, name, 0)

    @classmethod
    def cevian(cls, vertex: str, index: int) -> "SegmentLabel":
        return cls(CEVIAN, vertex, index)

    @property
    def is_side(self) -> bool:
        return self.kind == SIDE

    def passes_through(self, vertex: str) -> bool:
        if self.is_side:
            return vertex in self.name
        return self.name == vertex

    def __str__(self) -> str:
        return self.name if self.is_side else f"{self.name}{self.index + 1}"


@dataclass(frozen=True)
class Segment:
    p: Point2
    q: Point2
    label: Optional[SegmentLabel] = None

    def __post_init__(self):
        if self.p == self.q:
            raise ConfigValidationError(
                f"Degenerate segment {self.label}: both endpoints are {self.p}",
                entry=str(self.label))

    @property
    def direction(self) -> Point2:
        return self.q - self.p

    def point_at(self, t: RationalLike) -> Point2:
        return self.p.lerp(self.q, t)

    def __str__(self) -> str:
        name = f"{self.label} " if self.label else ""
        return f"{name}[{self.p} -> {self.q}]"


def cross(u: Point2, v: Point2) -> Fraction:
    return u.x * v.y - u.y * v.x


def dot(u: Point2, v: Point2) -> Fraction:
    return u.x * v.x + u.y * v.y


def orientation(p: Point2, q: Point2, r: Point2) -> int:
    """Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    value = cross(q - p, r - p)
    return (value > 0) - (value < 0)


def point_on_segment(point: Point2, segment: Segment) -> bool:
    """Closed-segment membership."""
    if orientation(segment.p, segment.q, point) != 0:
        return False
    return (min(segment.p.x, segment.q.x) <= point.x <= max(segment.p.x, segment.q.x)
            and min(segment.p.y, segment.q.y) <= point.y <= max(segment.p.y, segment.q.y))


def _collinear_intersection(s1: Segment, s2: Segment) -> Optional[Point2]:
    # Project onto s1's direction; parameters of s2's endpoints along s1
    d1 = s1.direction
    length_sq = dot(d1, d1)
    t_p = dot(s2.p - s1.p, d1) / length_sq
    t_q = dot(s2.q - s1.p, d1) / length_sq
    low = max(Fraction(0), min(t_p, t_q))
    high = min(Fraction(1), max(t_p, t_q))

    if low > high:
        return None
    if low == high:
        return s1.point_at(low)
    raise OverlappingSegmentsError(str(s1), str(s2))


def segment_intersection(s1: Segment, s2: Segment) -> Optional[Point2]:
    """
    Unique common point of two closed segments, or None when disjoint.

    Raises OverlappingSegmentsError for collinear segments sharing more than
    one point.
    """
    d1 = s1.direction
    d2 = s2.direction
    offset = s2.p - s1.p
    denominator = cross(d1, d2)

    if denominator == 0:
        if cross(offset, d1) != 0:
            return None  # parallel, distinct lines
        return _collinear_intersection(s1, s2)

    t = cross(offset, d2) / denominator
    u = cross(offset, d1) / denominator
    if not (0 <= t <= 1 and 0 <= u <= 1):
        return None

    return s1.point_at(t)


def triangle_contains_strictly(a: Point2, b: Point2, c: Point2, point: Point2) -> bool:
    """True when point lies in the open interior of triangle abc."""
    o1 = orientation(a, b, point)
    o2 = orientation(b, c, point)
    o3 = orientation(c, a, point)
    return o1 != 0 and o1 == o2 == o3

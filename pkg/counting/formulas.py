"""
Closed-form triangle counts for cevian pictures.

The general count chooses 3 of the a + b + c + 3 segments and removes the
triples that meet at a point instead of bounding a triangle:

    C(a+b+c+3, 3) - C(a+2, 3) - C(b+2, 3) - C(c+2, 3) - d

d, the number of interior points where three cevians meet, is an input:
it is not determined by a, b and c.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from number_theory import is_prime, theorem2_d
from utils import (
    logger,
    validate_operation,
    nonnegative_int,
    int_at_least,
    ConsistencyError,
    PreconditionError,
)

NONNEGATIVE = (nonnegative_int, 'must be a nonnegative integer')


class DProvenance(Enum):
    GEOMETRIC = "geometric"
    CEVA_EQUATION = "ceva-equation"
    STRUCTURAL_ZERO = "structural-zero"
    USER_SUPPLIED = "user-supplied"


@dataclass(frozen=True)
class CountReport:
    a: int
    b: int
    c: int
    d: int
    d_provenance: DProvenance
    triangle_count: int
    oracle_count: Optional[int] = None
    oracle_agrees: Optional[bool] = None

    def with_oracle(self, oracle_count: int) -> "CountReport":
        return CountReport(
            self.a, self.b, self.c, self.d, self.d_provenance, self.triangle_count,
            oracle_count=oracle_count,
            oracle_agrees=oracle_count == self.triangle_count,
        )

    def to_dict(self) -> Dict[str, Any]:
        """JSON schema: counts as decimal strings so arbitrary precision survives."""
        body = {
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "d": str(self.d),
            "d_provenance": self.d_provenance.value,
            "triangle_count": str(self.triangle_count),
        }
        if self.oracle_count is not None:
            body["oracle_count"] = str(self.oracle_count)
            body["oracle_agrees"] = self.oracle_agrees
        return body


def exact_quotient(numerator: int, divisor: int, formula: str) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise ConsistencyError(
            f"{formula}: {numerator} is not divisible by {divisor}",
            context={"numerator": numerator, "divisor": divisor})
    return quotient


@validate_operation(inputs={'n': NONNEGATIVE}, performance_logging=False)
def binom3(n: int) -> int:
    """n(n-1)(n-2)/6, which is 0 for n < 3."""
    return exact_quotient(n * (n - 1) * (n - 2), 6, "binom3")


def binom2(n: int) -> int:
    return exact_quotient(n * (n - 1), 2, "binom2")


@validate_operation(inputs={'a': NONNEGATIVE, 'b': NONNEGATIVE, 'c': NONNEGATIVE, 'd': NONNEGATIVE})
def theorem1_count(
    a: int,
    b: int,
    c: int,
    d: int,
    provenance: DProvenance = DProvenance.USER_SUPPLIED,
) -> CountReport:
    """Triangles formed by the sides of ABC plus a, b, c cevians with d interior concurrencies."""
    if min(a, b, c) == 0:
        if d != 0:
            raise PreconditionError(
                f"d={d} but a={a}, b={b}, c={c}: three cevians can only meet inside the triangle "
                f"when one comes from each vertex, so d must be 0 when a, b or c is 0",
                parameter="d")
        provenance = DProvenance.STRUCTURAL_ZERO
    elif d > a * b * c:
        raise PreconditionError(
            f"d={d} exceeds a*b*c={a * b * c}: each interior concurrency uses one A-, "
            f"one B- and one C-cevian, and each such choice meets at most once",
            parameter="d")

    triangles = binom3(a + b + c + 3) - binom3(a + 2) - binom3(b + 2) - binom3(c + 2) - d
    if triangles < 1:
        raise ConsistencyError(f"Triangle count {triangles} below 1 for a={a} b={b} c={c} d={d}")

    logger.debug(f"theorem1_count a={a} b={b} c={c} d={d} ({provenance.value}) -> {triangles}")
    return CountReport(a, b, c, d, provenance, triangles)


@validate_operation(inputs={'a': NONNEGATIVE, 'b': NONNEGATIVE})
def two_vertex_count(a: int, b: int) -> int:
    """Cevians from two vertices only: (a+1)(b+1)(a+b+2)/2."""
    return exact_quotient((a + 1) * (b + 1) * (a + b + 2), 2, "two_vertex_count")


@validate_operation(inputs={'n': NONNEGATIVE})
def symmetric_count(n: int) -> int:
    """n mirror-paired cevians from A and B plus the C-median: (n+3)(n+1)^2."""
    return (n + 3) * (n + 1) ** 2


@validate_operation(inputs={'n': NONNEGATIVE})
def generic_count(n: int) -> int:
    """n cevians from each vertex with no three concurrent."""
    return theorem1_count(n, n, n, 0).triangle_count


def theorem2_closed_form(q: int, p: int) -> int:
    if p == 2:
        return exact_quotient(8 * q ** 3 - 9 * q ** 2 - 3 * q + 10, 2, "theorem2 (p=2)")
    return exact_quotient(8 * q ** 3 - 9 * q ** 2 + 3 * q, 2, "theorem2 (odd p)")


@validate_operation(inputs={
    'p': (is_prime, 'p must be prime'),
    'm': (int_at_least(1), 'm must be an integer >= 1'),
})
def theorem2_count(p: int, m: int) -> CountReport:
    """
    Equal-division picture with q = p**m: q - 1 cevians per vertex at i/q.

    The parity closed form is checked against the general count with
    d = theorem2_d(p, m).
    """
    q = p ** m
    d = theorem2_d(p, m)
    report = theorem1_count(q - 1, q - 1, q - 1, d, provenance=DProvenance.CEVA_EQUATION)
    closed = theorem2_closed_form(q, p)
    if closed != report.triangle_count:
        raise ConsistencyError(
            f"q={q}: closed form {closed} disagrees with general count {report.triangle_count}",
            context={"p": p, "m": m})
    return report


@validate_operation(inputs={'p': (is_prime, 'p must be prime')})
def theorem2_prime_form(p: int) -> int:
    """C(3p, 3) - 3 C(p+1, 3): the unsimplified count for q = p when p is odd (d = 0)."""
    return binom3(3 * p) - 3 * binom3(p + 1)

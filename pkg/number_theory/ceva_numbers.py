"""
Solutions of the equal-division concurrency equation

    i * j * k = (n - i) * (n - j) * (n - k),    1 <= i, j, k <= n - 1.

Ordered triples biject with interior concurrency points of the
equal-division arrangement: i, j, k pick the A-, B- and C-cevian.
For fixed (i, j) the equation is linear in k:

    k * (i*j + (n-i)*(n-j)) = n * (n-i) * (n-j)
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .primes import is_prime, is_odd_prime_power
from utils import (
    logger,
    ordered_map,
    validate_operation,
    int_at_least,
    PreconditionError,
)

N_CHECK = (int_at_least(2), 'n must be an integer >= 2')


@dataclass(frozen=True, order=True)
class CevaSolution:
    n: int
    i: int
    j: int
    k: int

    def __post_init__(self):
        if not all(1 <= index <= self.n - 1 for index in self.indices):
            raise PreconditionError(
                f"Indices {self.indices} must lie in [1, {self.n - 1}]", parameter="indices")
        if self.i * self.j * self.k != (self.n - self.i) * (self.n - self.j) * (self.n - self.k):
            raise PreconditionError(
                f"{self.indices} does not satisfy ijk = (n-i)(n-j)(n-k) for n={self.n}",
                parameter="indices")

    @property
    def indices(self) -> Tuple[int, int, int]:
        return self.i, self.j, self.k

    def complement(self) -> "CevaSolution":
        return CevaSolution(self.n, self.n - self.i, self.n - self.j, self.n - self.k)

    def orbit(self) -> List["CevaSolution"]:
        """Images under index permutations and the complement map (at most 12)."""
        images = set()
        for base in (self, self.complement()):
            i, j, k = base.indices
            for triple in ((i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)):
                images.add(CevaSolution(self.n, *triple))
        return sorted(images)

    def canonical(self) -> "CevaSolution":
        return self.orbit()[0]

    def __str__(self) -> str:
        return f"({self.i}, {self.j}, {self.k})"


def solve_for_k(n: int, i: int, j: int) -> Optional[int]:
    """The unique k completing (i, j), when it is an integer in [1, n - 1]."""
    complement_product = (n - i) * (n - j)
    numerator = n * complement_product
    denominator = i * j + complement_product
    if numerator % denominator:
        return None
    k = numerator // denominator
    return k if 1 <= k <= n - 1 else None


def contains_median(solution: CevaSolution) -> bool:
    return solution.n % 2 == 0 and solution.n // 2 in solution.indices


@validate_operation(inputs={'n': N_CHECK})
def count_concurrencies(n: int) -> int:
    """Number of ordered solutions; the (i, j) swap symmetry halves the loop."""
    count = 0
    for i in range(1, n):
        for j in range(i, n):
            if solve_for_k(n, i, j) is not None:
                count += 1 if i == j else 2
    return count


@validate_operation(inputs={'n': N_CHECK})
def solve_concurrencies(n: int) -> List[CevaSolution]:
    """All ordered solutions in lexicographic order."""
    solutions = []
    for i in range(1, n):
        for j in range(1, n):
            k = solve_for_k(n, i, j)
            if k is not None:
                solutions.append(CevaSolution(n, i, j, k))
    logger.debug(f"n={n}: {len(solutions)} ordered solutions")
    return solutions


def _median_outward(n: int) -> List[int]:
    return sorted(range(1, n), key=lambda index: (abs(2 * index - n), index))


@validate_operation(inputs={'n': N_CHECK})
def find_concurrency_witness(n: int) -> Optional[CevaSolution]:
    """
    First solution found walking i and j outward from n/2, as its sorted
    orbit representative. The all-median centroid, present for every even n,
    is returned only when no other solution exists.
    """
    centroid = None
    order = _median_outward(n)
    for i in order:
        for j in order:
            k = solve_for_k(n, i, j)
            if k is None:
                continue
            if 2 * i == n and i == j == k:
                centroid = CevaSolution(n, i, j, k)
                continue
            return CevaSolution(n, *sorted((i, j, k)))
    return centroid


def has_concurrency(n: int) -> bool:
    return find_concurrency_witness(n) is not None


@validate_operation(inputs={
    'p': (is_prime, 'p must be prime'),
    'm': (int_at_least(1), 'm must be an integer >= 1'),
})
def theorem2_d(p: int, m: int) -> int:
    """Interior concurrencies for q = p**m equal divisions: 0 for odd p, 3q - 5 for p = 2."""
    if p != 2:
        return 0
    return 3 * 2 ** m - 5


def orbit_count(n: int) -> int:
    """Solution orbits under index permutations and complementation."""
    return len({solution.canonical() for solution in solve_concurrencies(n)})


def iter_odd_candidates(limit: int, skip_prime_powers: bool = True) -> Iterator[int]:
    for n in range(3, limit + 1, 2):
        if skip_prime_powers and is_odd_prime_power(n):
            continue
        yield n


def odd_positive_list(limit: int, skip_prime_powers: bool = True, workers: int = None) -> List[int]:
    """
    Odd n <= limit with at least one interior concurrency, ascending.

    Odd prime powers have none, so they are skipped unless skip_prime_powers
    is False.
    """
    candidates = list(iter_odd_candidates(limit, skip_prime_powers))
    flags = ordered_map(has_concurrency, candidates, workers=workers)
    return [n for n, positive in zip(candidates, flags) if positive]

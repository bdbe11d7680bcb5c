"""
Scans of the two composite families conjectured to always carry an interior
concurrency:

    family 1: n = p(2p - 1) with p and 2p - 1 prime
    family 2: n = p^2(2p + 1) with p and 2p + 1 prime (p a Sophie Germain prime)
"""
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .ceva_numbers import CevaSolution, count_concurrencies, find_concurrency_witness
from .primes import is_prime, primes_up_to
from utils import (
    logger,
    ordered_map,
    PreconditionError,
    FAMILY_LABELS,
    FAMILY_P_2P_MINUS_1,
    FAMILY_P2_2P_PLUS_1,
    VALID_FAMILIES,
)


@dataclass(frozen=True)
class ScanRecord:
    p: int
    n: int
    companion_prime: int
    has_solution: bool
    witness: Optional[CevaSolution] = None
    solution_count: Optional[int] = None

    def __post_init__(self):
        if self.has_solution != (self.witness is not None):
            raise PreconditionError(
                f"ScanRecord for n={self.n}: witness must be present exactly when has_solution",
                parameter="witness")

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": str(self.p),
            "n": str(self.n),
            "companion_prime": str(self.companion_prime),
            "has_solution": self.has_solution,
            "witness": list(self.witness.indices) if self.witness else None,
            "solution_count": None if self.solution_count is None else str(self.solution_count),
        }


def normalize_family(family) -> str:
    family = str(family).strip()
    if family not in VALID_FAMILIES:
        raise PreconditionError(
            f"Unknown family {family!r}; expected one of {VALID_FAMILIES}", parameter="family")
    return family


def family_member(family, p: int) -> Tuple[int, int]:
    """(n, companion) for prime p in the given family."""
    family = normalize_family(family)
    if family == FAMILY_P_2P_MINUS_1:
        companion = 2 * p - 1
        return p * companion, companion
    companion = 2 * p + 1
    return p * p * companion, companion


def qualifying_primes(family, p_max: int) -> List[Tuple[int, int, int]]:
    """(p, n, companion) for each p <= p_max whose companion is also prime, ascending."""
    members = []
    for p in primes_up_to(p_max):
        n, companion = family_member(family, p)
        if is_prime(companion):
            members.append((p, n, companion))
        else:
            logger.debug(f"p={p} skipped: companion {companion} is composite")
    return members


def _scan_member(task: Tuple[int, int, int, bool]) -> ScanRecord:
    p, n, companion, count_all = task
    start_time = time.perf_counter()
    witness = find_concurrency_witness(n)
    solution_count = count_concurrencies(n) if count_all else None
    logger.log_scan_progress(f"p={p}", n, time.perf_counter() - start_time)
    return ScanRecord(
        p=p,
        n=n,
        companion_prime=companion,
        has_solution=witness is not None,
        witness=witness,
        solution_count=solution_count,
    )


def scan_family(family, p_max: int, count_all: bool = False, workers: int = None) -> List[ScanRecord]:
    """
    One record per qualifying prime p <= p_max, ascending in p.

    Distinct n may be evaluated in parallel; the merged records are
    identical to a serial scan.
    """
    family = normalize_family(family)
    tasks = [(p, n, companion, count_all) for p, n, companion in qualifying_primes(family, p_max)]
    logger.info(f"Scanning family {FAMILY_LABELS[family]} for p <= {p_max}: {len(tasks)} members")

    records = ordered_map(_scan_member, tasks, workers=workers)

    missing = [record.n for record in records if not record.has_solution]
    if missing:
        logger.warning(f"Family {FAMILY_LABELS[family]} members without concurrency: {missing}")
    return records

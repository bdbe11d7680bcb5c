from typing import List, Optional, Tuple

from sympy import factorint, isprime, primerange

from utils import logger, is_int


def is_prime(n: int) -> bool:
    """
    Exact primality.

    sympy.isprime runs deterministic Miller-Rabin bases below 2**64 and the
    strong BPSW test above; no random witnesses are drawn.
    """
    if not is_int(n) or n < 2:
        return False
    return bool(isprime(n))


def primes_up_to(limit: int) -> List[int]:
    if limit < 2:
        return []
    return list(primerange(2, limit + 1))


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """(p, m) with n = p**m and m >= 1, or None."""
    if not is_int(n) or n < 2:
        return None
    factors = factorint(n)
    if len(factors) != 1:
        return None
    (p, m), = factors.items()
    logger.debug(f"{n} = {p}^{m}")
    return int(p), int(m)


def is_odd_prime_power(n: int) -> bool:
    power = prime_power(n)
    return power is not None and power[0] != 2

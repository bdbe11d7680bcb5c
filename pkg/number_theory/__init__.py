# init for number_theory folder containing primes.py, ceva_numbers.py, and scanner.py
from .primes import is_prime, primes_up_to, prime_power, is_odd_prime_power
from .ceva_numbers import (
    CevaSolution,
    solve_for_k,
    contains_median,
    count_concurrencies,
    solve_concurrencies,
    find_concurrency_witness,
    has_concurrency,
    theorem2_d,
    orbit_count,
    odd_positive_list,
)
from .scanner import ScanRecord, scan_family, qualifying_primes, family_member

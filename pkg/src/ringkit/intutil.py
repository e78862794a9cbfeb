"""Small integer helpers shared across the package."""

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def is_prime(n):
    """Deterministic primality test by trial division (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def primes_up_to(bound):
    """All primes <= bound, ascending (simple sieve)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for k in range(2, math.isqrt(bound) + 1):
        if sieve[k]:
            sieve[k * k:: k] = bytearray(len(sieve[k * k:: k]))
    return [k for k in range(bound + 1) if sieve[k]]


def is_squarefree(n):
    """True when no square of a prime divides n (n may be negative)."""
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        if n % k == 0:
            n //= k
        k += 1
    return True

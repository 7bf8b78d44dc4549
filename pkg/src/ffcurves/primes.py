"""Small integer utilities: deterministic primality, sieving, factoring."""

import numpy as np

# Jaeschke/Sorenson-Webster: these bases decide every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n below ``MR_LIMIT``."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    if n >= MR_LIMIT:
        raise OverflowError(f"{n} exceeds the deterministic Miller-Rabin range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(n: int) -> np.ndarray:
    """Boolean array ``a`` of length n+1 with ``a[m]`` true iff m is prime."""
    a = np.ones(n + 1, dtype=bool)
    a[:2] = False
    for m in range(2, int(n**0.5) + 1):
        if a[m]:
            a[m * m :: m] = False
    return a


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    return np.flatnonzero(sieve(n)).tolist()


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n (trial division), ascending."""
    out = []
    m = 2
    while m * m <= n:
        if n % m == 0:
            out.append(m)
            while n % m == 0:
                n //= m
        m += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [m for m in range(1, n + 1) if n % m == 0]


def mobius(n: int) -> int:
    res = 1
    m = 2
    while m * m <= n:
        if n % m == 0:
            n //= m
            if n % m == 0:
                return 0
            res = -res
        m += 1
    if n > 1:
        res = -res
    return res

"""Exact integer and modular arithmetic: residues, inverses, totient, factorization.

Everything here is deterministic and exact. Python integers are arbitrary
precision, so intermediate products never overflow; floats are deliberately
not used anywhere in this module.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

SIEVE_LIMIT = 1_000_000


def rep_mod(x: int, n: int) -> int:
    """Representative of x mod n in [0, n)."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return x % n


def mod_inverse(b: int, c: int) -> int:
    """Inverse of b mod c, in [0, c). Raises ValueError if gcd(b, c) != 1."""
    if c < 1:
        raise ValueError(f"modulus must be positive, got {c}")
    try:
        return pow(b, -1, c)
    except ValueError:
        raise ValueError(f"{b} is not invertible mod {c}") from None


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit, ascending (sieve of Eratosthenes)."""
    if limit < 2:
        return ()
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _sieved_primes() -> tuple[int, ...]:
    return primes_up_to(SIEVE_LIMIT)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as [(prime, exponent), ...], primes ascending.

    Trial division over the sieved primes, continuing with 6k+-1 candidates
    for the (rare) inputs whose square root exceeds the sieve limit.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    for p in _sieved_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 1
            n //= p
            while n % p == 0:
                e += 1
                n //= p
            out.append((p, e))
    else:
        # sieve exhausted with n not fully reduced: continue by 6k+-1 steps
        # (aligned downward so no residue class is skipped at the seam; all
        # prime factors <= SIEVE_LIMIT are already removed at this point)
        d = SIEVE_LIMIT + 1
        d -= (d % 6 - 1) % 6
        while d * d <= n:
            for cand in (d, d + 4):
                if cand * cand > n:
                    break
                if n % cand == 0:
                    e = 0
                    while n % cand == 0:
                        e += 1
                        n //= cand
                    out.append((cand, e))
            d += 6
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division."""
    if n < 2:
        return False
    for p in _sieved_primes():
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    f = factorize(n)
    return f == [(n, 1)]


def euler_phi(n: int) -> int:
    """Euler's totient: count of k in [1, n] coprime to n."""
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def omega(n: int) -> int:
    """Number of distinct prime factors of n; omega(1) = 0."""
    return len(factorize(n))


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    rad = 1
    for p, _ in factorize(n):
        rad *= p
    return rad


def prime_powers_up_to(limit: int) -> list[tuple[int, int]]:
    """All prime powers p^k <= limit as (value, base) pairs, sorted by value.

    Plain primes are included (k = 1); values with two distinct prime bases
    are not prime powers and are excluded.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    out = []
    for p in primes_up_to(limit):
        v = p
        while v <= limit:
            out.append((v, p))
            v *= p
    out.sort()
    return out

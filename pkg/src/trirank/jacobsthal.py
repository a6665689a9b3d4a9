"""Jacobsthal function and the bound chain that caps the search space.

j(n) is the smallest m such that every m consecutive integers contain one
coprime to n. It depends only on the radical of n, is at most 2^omega(n)
(Kanold), and omega itself is capped by Robin's bound. Combined with the
Hajdu-Saradha table of maximal coprime gaps for a given number of distinct
primes, these yield the two reduction chains that bring the exhaustive
triple search down to n <= 10000.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import prod

import numpy as np

from .modular import factorize, omega, primes_up_to, radical

# Maximal coprime gap H(w) = max j(m) over m with omega(m) = w, for the
# thresholds the reduction chains use (computed by Hajdu and Saradha).
H_BY_OMEGA = {24: 236, 11: 58, 10: 46, 9: 40, 6: 22, 5: 14}

ROBIN_COEFF = 1.3841

RADICAL_GUARD = 10**7


@dataclass(frozen=True)
class JacobsthalRecord:
    n: int
    j: int
    omega: int
    kanold_bound: int


def jacobsthal(n: int) -> int:
    """Smallest m such that any m consecutive integers contain one coprime to n.

    Uses j(n) = j(rad(n)) and scans one full period of the coprimality
    pattern mod rad(n): j is the largest circular gap between consecutive
    coprime residues. Refuses radicals beyond RADICAL_GUARD.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    primes = tuple(p for p, _ in factorize(n))
    rad = prod(primes)
    if rad > RADICAL_GUARD:
        raise ValueError(f"radical {rad} too large to scan")
    return _scan_gap(primes)


@lru_cache(maxsize=None)
def _scan_gap(primes: tuple[int, ...]) -> int:
    if not primes:
        return 1
    m = prod(primes)
    marked = np.zeros(m, dtype=bool)
    for p in primes:
        marked[::p] = True
    coprime = np.flatnonzero(~marked)
    # coprime[0] == 1 and coprime[-1] == m - 1, so no non-coprime run wraps
    # past residue 1; the circular gap through 0 is handled explicitly
    gaps = np.diff(coprime)
    wrap = int(coprime[0]) + m - int(coprime[-1])
    j = max(int(gaps.max(initial=0)), wrap)
    assert j <= m
    return j


def jacobsthal_record(n: int) -> JacobsthalRecord:
    w = omega(n)
    return JacobsthalRecord(n=n, j=jacobsthal(n), omega=w, kanold_bound=2**w)


def check_kanold(n: int) -> bool:
    """True iff j(n) <= 2^omega(n)."""
    return jacobsthal(n) <= 2 ** omega(n)


def robin_check(n: int) -> bool:
    """True iff omega(n) <= 1.3841 * ln(n) / ln(ln(n)). Requires n >= 3."""
    if n < 3:
        raise ValueError(f"bound needs n >= 3, got {n}")
    return omega(n) <= ROBIN_COEFF * math.log(n) / math.log(math.log(n))


def bound_j(n: int) -> int:
    """Upper bound for j(n) from Kanold and the gap table; never scans.

    Takes the minimum of 2^omega(n) and every table entry whose
    distinct-prime threshold is at least omega(n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    w = omega(n)
    best = 2**w
    for threshold, h in H_BY_OMEGA.items():
        if threshold >= w:
            best = min(best, h)
    return best


def primorial(k: int) -> int:
    """Product of the first k primes."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    primes: tuple[int, ...] = ()
    limit = 128
    while len(primes) < k:
        primes = primes_up_to(limit)
        limit *= 4
    return prod(primes[:k])


@dataclass(frozen=True)
class ReductionStep:
    omega_cap: int  # distinct-prime count valid on the incoming range
    gap_cap: int  # resulting j(n) bound from the table
    threshold: int  # range endpoint the bound certifies down to


@dataclass(frozen=True)
class ReductionReport:
    primorial_25: int
    enumeration_steps: tuple[ReductionStep, ...]
    enumeration_threshold: int
    window_steps: tuple[ReductionStep, ...]
    window_threshold: int


def verify_reduction_chain() -> ReductionReport:
    """Recompute both bound-reduction chains and assert every claimed step.

    Chain 1 certifies 24*j(n)^2 < sqrt(n) down to 24^2 * 40^4 = 1.47456e9,
    starting from the 25th primorial. Chain 2 certifies j(n) < sqrt(n)/6
    down to 36 * 14^2 = 7056. Each step's range must genuinely cap omega
    (range end below the next primorial) and the thresholds must descend;
    any mismatch with the embedded constants raises AssertionError.
    """
    p25 = primorial(25)
    if not p25 > 23 * 10**35:
        raise AssertionError("25th primorial must exceed 2.3e36")

    chain1 = [(24, 236, 1786777583616), (11, 58, 6518301696), (10, 46, 2579014656), (9, 40, 1474560000)]
    steps1 = []
    upper_excl = p25  # first range is n < p25 strictly
    for omega_cap, gap_cap, expected in chain1:
        if not upper_excl <= primorial(omega_cap + 1):
            raise AssertionError(
                f"range below {upper_excl} does not force omega <= {omega_cap}"
            )
        threshold = 24**2 * gap_cap**4
        if threshold != expected:
            raise AssertionError(f"24^2*{gap_cap}^4 = {threshold} != {expected}")
        if threshold >= upper_excl:
            raise AssertionError("chain thresholds must strictly descend")
        steps1.append(ReductionStep(omega_cap, gap_cap, threshold))
        upper_excl = threshold + 1  # later ranges are n <= threshold
    # fixed point: the final range still gives omega <= 9, j <= 40
    if not upper_excl <= primorial(10):
        raise AssertionError("final enumeration range must keep omega <= 9")

    chain2 = [(9, 40, 57600), (6, 22, 17424), (5, 14, 7056)]
    steps2 = []
    start = 2 * 10**9
    if not steps1[-1].threshold <= start:
        raise AssertionError("window chain must start above the enumeration bound")
    upper_excl = start + 1
    for omega_cap, gap_cap, expected in chain2:
        if not upper_excl <= primorial(omega_cap + 1):
            raise AssertionError(
                f"range below {upper_excl} does not force omega <= {omega_cap}"
            )
        threshold = 36 * gap_cap**2
        if threshold != expected:
            raise AssertionError(f"36*{gap_cap}^2 = {threshold} != {expected}")
        if threshold >= upper_excl:
            raise AssertionError("chain thresholds must strictly descend")
        steps2.append(ReductionStep(omega_cap, gap_cap, threshold))
        upper_excl = threshold + 1

    return ReductionReport(
        primorial_25=p25,
        enumeration_steps=tuple(steps1),
        enumeration_threshold=steps1[-1].threshold,
        window_steps=tuple(steps2),
        window_threshold=steps2[-1].threshold,
    )

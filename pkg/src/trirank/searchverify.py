"""The two embedded computer searches: unit windows mod beta, and
subinterval coverage by prime-power multipliers.

All interval arithmetic is exact: comparisons are done by integer
cross-multiplication, never in floating point, because the interesting
indices sit exactly on rational boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .modular import prime_powers_up_to

# Exception list this tool's beta search is compared against (see README;
# the strict-window search is expected to also flag beta = 12, and any
# divergence from this list is surfaced rather than suppressed).
REFERENCE_BETA_EXCEPTIONS = (4, 10, 18, 30)


@dataclass(frozen=True)
class BetaResult:
    """A denominator beta whose unit group misses the window [beta/9, 2*beta/9].

    fallback_ok records whether the widened directional windows still work:
    with accumulated error below 1/12, an overshoot needs a unit c with
    c/beta in (0, 1/4] and an undershoot one with c/beta in [1/12, 1/3].
    Both windows are independent of the approximated point, so the result
    depends only on beta.
    """

    beta: int
    has_unit_in_window: bool
    fallback_ok: bool
    overshoot_unit: int | None = None
    undershoot_unit: int | None = None


def _has_unit_between(beta: int, lo_num: int, lo_den: int, hi_num: int, hi_den: int) -> int | None:
    """Smallest unit u mod beta with lo <= u/beta <= hi (closed, exact), or None."""
    u_min = -(-lo_num * beta // lo_den)  # ceil(lo * beta)
    u_max = hi_num * beta // hi_den  # floor(hi * beta)
    for u in range(max(u_min, 1), u_max + 1):
        if gcd(u, beta) == 1:
            return u
    return None


def beta_search(beta_min: int = 4, beta_max: int = 10000) -> list[BetaResult]:
    """Denominators in [beta_min, beta_max] with no unit in [beta/9, 2*beta/9].

    Returns only the exceptions, each annotated with the widened-window
    fallback information.
    """
    if beta_min < 4:
        raise ValueError(f"beta_min must be >= 4, got {beta_min}")
    if beta_max < beta_min:
        raise ValueError("empty beta range")
    out = []
    for beta in range(beta_min, beta_max + 1):
        if _has_unit_between(beta, 1, 9, 2, 9) is not None:
            continue
        over = _has_unit_between(beta, 1, beta, 1, 4)  # (0, 1/4]: u >= 1 suffices
        under = _has_unit_between(beta, 1, 12, 1, 3)  # [1/12, 1/3]
        out.append(
            BetaResult(
                beta=beta,
                has_unit_in_window=False,
                fallback_ok=over is not None and under is not None,
                overshoot_unit=over,
                undershoot_unit=under,
            )
        )
    return out


# regime -> (subinterval count, prime power limit, target right end, default boundary)
REGIMES = {
    "A": (10000, 80, Fraction(3, 5), "open"),
    "B": (12000, 1000, Fraction(1, 3), "closed"),
}

WITNESSES_REQUIRED = 10


@dataclass(frozen=True)
class CoverageReport:
    """Per-subinterval witness counts for one coverage search.

    Subinterval j is the closed interval [j/M, (j+1)/M] of the unit circle
    (closure is the conservative choice: the estimate must hold for every
    point of the subinterval). A multiplier c witnesses j when the image
    c * [j/M, (j+1)/M] mod 1 lies entirely inside [0, target] (boundary
    "closed") or [0, target) (boundary "open"); an image straddling a wrap
    point never counts.

    The search certifies, for every point x of a good subinterval, a
    multiplier k with gcd(k, n) = 1 and frac(k*x) in the target, without
    knowing n. Two routes do that: k = 1 (coprime to everything) when the
    subinterval itself sits inside the target, or ten witnessing prime
    powers with pairwise distinct bases (n in the certified range has at
    most nine distinct prime factors, so one of the ten is coprime to n).
    witness_counts records the distinct-prime-base count per subinterval
    (one witness per base, smallest power first); bad indices are those
    covered by neither route.
    """

    regime: str
    subinterval_count: int
    prime_power_limit: int
    target: Fraction
    boundary: str
    bad_indices: tuple[int, ...]
    witness_counts: tuple[int, ...]


def _covered(c: int, j: int, m: int, t_num: int, t_den: int, closed: bool) -> bool:
    # image of c*[j/M, (j+1)/M] shifted left by floor(c*j/M) is [f_lo, f_hi]
    # with 0 <= f_lo <= f_hi; it stays inside [0, target] iff f_hi does
    # (f_hi <= target < 1 also rules out any wrap)
    f_hi = c * (j + 1) - (c * j // m) * m  # numerator of f_hi over m
    lhs = f_hi * t_den
    rhs = t_num * m
    return lhs <= rhs if closed else lhs < rhs


def coverage_check(regime: str, boundary: str | None = None) -> CoverageReport:
    """Run one regime's full subinterval search and report the bad indices."""
    if regime not in REGIMES:
        raise ValueError(f"regime must be one of {sorted(REGIMES)}, got {regime!r}")
    m, limit, target, default_boundary = REGIMES[regime]
    boundary = boundary or default_boundary
    if boundary not in ("open", "closed"):
        raise ValueError(f"boundary must be 'open' or 'closed', got {boundary!r}")
    closed = boundary == "closed"
    t_num, t_den = target.numerator, target.denominator
    pps = prime_powers_up_to(limit)

    counts = []
    bad = []
    for j in range(m):
        seen: set[int] = set()
        for c, base in pps:
            if base not in seen and _covered(c, j, m, t_num, t_den, closed):
                seen.add(base)
        counts.append(len(seen))
        if len(seen) < WITNESSES_REQUIRED and not _covered(1, j, m, t_num, t_den, closed):
            bad.append(j)
    return CoverageReport(
        regime=regime,
        subinterval_count=m,
        prime_power_limit=limit,
        target=target,
        boundary=boundary,
        bad_indices=tuple(bad),
        witness_counts=tuple(counts),
    )


def point_witnesses(x, regime: str, boundary: str | None = None) -> list[int]:
    """Prime powers c (one per base, smallest first) with frac(c*x) in the target.

    Diagnoses a single point x = [q^(-1) r]_n / n rather than a whole
    subinterval; x must be an exact rational in [0, 1).
    """
    if regime not in REGIMES:
        raise ValueError(f"regime must be one of {sorted(REGIMES)}, got {regime!r}")
    _, limit, target, default_boundary = REGIMES[regime]
    boundary = boundary or default_boundary
    closed = boundary == "closed"
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"x must lie in [0, 1), got {x}")
    num, den = x.numerator, x.denominator
    t_num, t_den = target.numerator, target.denominator
    out = []
    seen: set[int] = set()
    for c, base in prime_powers_up_to(limit):
        if base in seen:
            continue
        frac_num = (c * num) % den  # frac(c*x) = frac_num / den
        lhs = frac_num * t_den
        rhs = t_num * den
        if lhs <= rhs if closed else lhs < rhs:
            out.append(c)
            seen.add(base)
    return out

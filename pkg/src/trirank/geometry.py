"""Horizontal cylinders on the family-3 star unfolding and the moduli test.

For p = 1, q = 4, r = 7 mod 8 (so n = 4 mod 8) the unfolding is an n-pointed
star carrying two horizontal cylinders with closed-form heights and
circumferences in alpha = (n-2)*pi/n. Their moduli ratio is 4*cos(alpha)^2;
if that ratio is irrational the two parallel cylinders are incommensurable
and the surface cannot be a lattice surface. Irrationality is decided
exactly on the angle (the cosine of a rational multiple of pi is rational
only for multiples of pi/3 or pi/2), never by floating-point heuristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classifier import Lattice, LatticeStatus, PROV_HOOPER, PROV_MODULI

RATIO_AGREEMENT_TOL = 1e-9


@dataclass(frozen=True)
class CylinderData:
    which: str  # "top" | "bottom"
    height: float
    circumference: float

    def __post_init__(self):
        if not (self.height > 0 and self.circumference > 0):
            raise ValueError(
                f"{self.which} cylinder must have positive dimensions, got "
                f"h={self.height}, c={self.circumference}"
            )

    @property
    def modulus(self) -> float:
        return self.height / self.circumference


def _check_family3_n(n: int) -> None:
    if n % 8 != 4 or n < 12:
        raise ValueError(f"star unfolding needs n = 4 mod 8 and n >= 12, got {n}")


def star_angle(n: int) -> Fraction:
    """Interior angle of the regular n-gon as a multiple of pi, reduced."""
    _check_family3_n(n)
    return Fraction(n - 2, n)


def star_cylinders(n: int) -> tuple[CylinderData, CylinderData]:
    """The two horizontal cylinders of the n-pointed star, evaluated at
    alpha = (n-2)*pi/n in double precision."""
    _check_family3_n(n)
    alpha = (n - 2) * math.pi / n
    top = CylinderData(
        which="top",
        height=math.sin(alpha),
        circumference=2 - 4 * math.cos(alpha) + 2 * math.cos(2 * alpha) - 2 * math.cos(3 * alpha),
    )
    bottom = CylinderData(
        which="bottom",
        height=-math.sin(2 * alpha),
        circumference=1 - 2 * math.cos(alpha) + 2 * math.cos(2 * alpha),
    )
    return top, bottom


def moduli_ratio(n: int) -> float:
    """Ratio of the two cylinder moduli, via the closed form 4*cos(alpha)^2.

    Independent of star_cylinders; the two evaluation paths agree to
    RATIO_AGREEMENT_TOL and tests enforce that.
    """
    _check_family3_n(n)
    return 4 * math.cos((n - 2) * math.pi / n) ** 2


def rational_cosine(angle: Fraction) -> Fraction | None:
    """Exact value of cos(angle * pi) when rational, else None.

    cos of a rational multiple of pi is rational only when the angle is an
    integer multiple of pi/3 or pi/2, i.e. only denominators 1, 2, 3 after
    reduction, with values in {0, +-1/2, +-1}.
    """
    angle = Fraction(angle)
    k = angle.numerator % (2 * angle.denominator)  # cos has period 2*pi
    m = angle.denominator
    if m == 1:
        return Fraction(1) if k == 0 else Fraction(-1)
    if m == 2:
        return Fraction(0)
    if m == 3:
        return Fraction(1, 2) if k in (1, 5) else Fraction(-1, 2)
    return None


def family3_verdict(n: int) -> LatticeStatus:
    """Lattice verdict for the family-3 triangle with angle sum n.

    n = 12 is the lattice triangle found by Hooper; for n > 12 the angle
    2*alpha = 2(n-2)*pi/n has irrational cosine, so the moduli ratio
    4*cos(alpha)^2 = 2 + 2*cos(2*alpha) is irrational and the two parallel
    cylinders are incommensurable.
    """
    _check_family3_n(n)
    if n == 12:
        return LatticeStatus(Lattice.LATTICE, PROV_HOOPER)
    two_alpha = Fraction(2 * (n - 2), n)
    if rational_cosine(two_alpha) is not None:
        raise AssertionError(
            f"cos(2*alpha) unexpectedly rational for n={n}; moduli test is void"
        )
    return LatticeStatus(Lattice.NOT_LATTICE, PROV_MODULI)

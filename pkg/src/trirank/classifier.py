"""Taxonomy of criterion failures and lattice verdicts.

Strongly obtuse triples (r > 2n/3) fail the rank criterion exactly when they
belong to one of six one-parameter families or a fixed list of seven
exceptional triples. Combining that with external facts (Veech's isosceles
family and the Vorobets/Ward family are lattice; the exceptional unfoldings
were found to have dense orbit closure by computation; family 3 above n = 12
has incommensurable cylinder moduli) yields the lattice classification for
obtuse angle >= 135 degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator

from .criterion import (
    Region,
    Triple,
    Verdict,
    mw_eigen_oracle,
    mw_witness,
    mw_witness_hinted,
    region,
    region_at_least,
)
from .modular import is_prime, mod_inverse


class Family(enum.Enum):
    FAMILY1 = "family1"  # p = q = 1
    FAMILY2 = "family2"  # p = 1, q = 2, n even
    FAMILY3 = "family3"  # p = 1, q = 4, r = 7 mod 8
    FAMILY4 = "family4"  # p = 1, r = 3q + 1
    FAMILY5 = "family5"  # p = 2, r = 3q + 2
    FAMILY6 = "family6"  # p = 4, r = 3q + 4
    EXCEPTIONAL = "exceptional"


EXCEPTIONAL_TRIPLES = frozenset(
    {
        (1, 4, 11),
        (1, 3, 16),
        (2, 3, 17),
        (1, 4, 21),
        (1, 8, 19),
        (3, 8, 29),
        (2, 11, 29),
    }
)

HOOPER_TRIPLE = (1, 4, 7)


class Lattice(enum.Enum):
    LATTICE = "lattice"
    NOT_LATTICE = "not-lattice"
    OUT_OF_SCOPE = "out-of-theorem-scope"


@dataclass(frozen=True)
class LatticeStatus:
    status: Lattice
    provenance: str


PROV_VEECH = "veech-isosceles-family"
PROV_VOROBETS_WARD = "vorobets-ward-family"
PROV_MODULI = "incommensurable-cylinder-moduli"
PROV_DENSE_ORBIT = "dense-orbit-closure-computation"
PROV_HOOPER = "hooper-triangle"
PROV_RANK = "rank-criterion"


def classify_family(t: Triple) -> frozenset[Family]:
    """All family labels matching t; empty set means generic.

    Labels are evaluated on the raw (p, q, r) with no region precondition,
    so e.g. (1,4,7) is labeled family3 even though it is not strongly obtuse.
    Labels are not exclusive: (1,1,4) is both family1 and family4.
    """
    p, q, r = t.p, t.q, t.r
    labels = set()
    if p == 1 and q == 1:
        labels.add(Family.FAMILY1)
    if p == 1 and q == 2 and t.n % 2 == 0:
        labels.add(Family.FAMILY2)
    if p == 1 and q == 4 and r % 8 == 7:
        labels.add(Family.FAMILY3)
    if p == 1 and r == 3 * q + 1:
        labels.add(Family.FAMILY4)
    if p == 2 and r == 3 * q + 2:
        labels.add(Family.FAMILY5)
    if p == 4 and r == 3 * q + 4:
        labels.add(Family.FAMILY6)
    if (p, q, r) in EXCEPTIONAL_TRIPLES:
        labels.add(Family.EXCEPTIONAL)
    return frozenset(labels)


def predicted_mw(t: Triple) -> bool:
    """Predicted criterion outcome for a strongly obtuse triple.

    True (criterion satisfiable) exactly when t matches no family label.
    """
    if not region_at_least(t, Region.STRONGLY_OBTUSE):
        raise ValueError(
            f"prediction only covers strongly obtuse triples, got {t.as_tuple()}"
        )
    return not classify_family(t)


def lattice_status(t: Triple) -> LatticeStatus:
    """Lattice verdict where the classification decides it.

    Definite verdicts are emitted only for r >= 3n/4 (obtuse angle >= 135
    degrees) and for family-3 triples; everything else is out of scope, with
    any known partial information recorded in the provenance text.
    """
    fams = classify_family(t)
    tup = t.as_tuple()
    n = t.n

    if tup == HOOPER_TRIPLE:
        return LatticeStatus(Lattice.LATTICE, PROV_HOOPER)
    if Family.FAMILY3 in fams and n > 12:
        return LatticeStatus(Lattice.NOT_LATTICE, PROV_MODULI)

    if 4 * t.r >= 3 * n:
        if Family.FAMILY1 in fams:
            return LatticeStatus(Lattice.LATTICE, PROV_VEECH)
        if Family.FAMILY2 in fams:
            return LatticeStatus(Lattice.LATTICE, PROV_VOROBETS_WARD)
        if Family.EXCEPTIONAL in fams:
            return LatticeStatus(Lattice.NOT_LATTICE, PROV_DENSE_ORBIT)
        # families 4-6 never reach r >= 3n/4 (r = 3q+p < 3n/4 = 3q + 1.5p),
        # so anything left is generic and the criterion applies
        return LatticeStatus(Lattice.NOT_LATTICE, PROV_RANK)

    if Family.EXCEPTIONAL in fams:
        return LatticeStatus(
            Lattice.OUT_OF_SCOPE,
            "outside-classification-range (dense orbit closure reported by computation)",
        )
    if Family.FAMILY4 in fams and t.q > 1 and t.q % 2 == 1:
        return LatticeStatus(
            Lattice.OUT_OF_SCOPE,
            "outside-classification-range (Ward: odd-q subfamily known non-lattice)",
        )
    return LatticeStatus(Lattice.OUT_OF_SCOPE, "outside-classification-range")


def counterexample_triple(p: int, x: int) -> Triple:
    """Obtuse (not strongly obtuse) triple on which the criterion fails.

    For an odd prime p and x >= 1: let m be the product of all integers in
    [1, 2p) except p and c = m^(-1) mod p; then n = (x*p - c)*m,
    r = p*n/(2p-1), q = (p-1)*n/(2p-1) - p. Both divisions are exact because
    2p - 1 divides m; a remainder indicates an implementation bug.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    m = prod(k for k in range(1, 2 * p) if k != p)
    c = mod_inverse(m, p)
    n = (x * p - c) * m
    r, rem = divmod(p * n, 2 * p - 1)
    if rem:
        raise AssertionError("p*n/(2p-1) must be exact")
    q, rem = divmod((p - 1) * n, 2 * p - 1)
    if rem:
        raise AssertionError("(p-1)*n/(2p-1) must be exact")
    q -= p
    t = Triple(p, q, r)
    if t.n != n or 2 * r <= n:
        raise AssertionError("generated triple violates its defining relations")
    return t


def triples_for_n(n: int, minimum: Region) -> list[Triple]:
    """All valid triples with angle sum n in region at least `minimum`,
    ordered by (p, q)."""
    if minimum is Region.OBTUSE:
        s_max = (n - 1) // 2  # p + q <= s_max <=> r > n/2
    elif minimum is Region.STRONGLY_OBTUSE:
        s_max = (n - 1) // 3
    elif minimum is Region.VERY_OBTUSE:
        s_max = n - (3 * n + 3) // 4  # r >= 3n/4 <=> p + q <= n - ceil(3n/4)
    else:
        raise ValueError(f"enumeration region must be obtuse or narrower, got {minimum}")
    out = []
    for p in range(1, s_max // 2 + 1):
        for q in range(p, s_max - p + 1):
            r = n - p - q
            if gcd(p, q, r) == 1:
                out.append(Triple(p, q, r))
    return out


class OracleDisagreement(AssertionError):
    """The two criterion implementations returned different verdicts."""


def classify_triple(
    t: Triple, validate: bool = False, hinted: bool = False
) -> tuple[Triple, Verdict, frozenset[Family]]:
    """Verdict and family labels for one triple.

    With validate=True the eigenspace-route oracle runs alongside the direct
    scan and any disagreement raises OracleDisagreement.
    """
    verdict = mw_witness_hinted(t) if hinted else mw_witness(t)
    if validate:
        other = mw_eigen_oracle(t)
        if (other.satisfied, other.witness) != (verdict.satisfied, verdict.witness):
            raise OracleDisagreement(
                f"{t.as_tuple()}: scan gave {verdict}, eigen oracle gave {other}"
            )
    return t, verdict, classify_family(t)


def enumerate_triples(
    n_max: int,
    minimum: Region = Region.STRONGLY_OBTUSE,
    validate: bool = False,
    hinted: bool = False,
) -> Iterator[tuple[Triple, Verdict, frozenset[Family]]]:
    """Stream (triple, verdict, families) for all triples with n <= n_max.

    Deterministic order: ascending n, then p, then q.
    """
    for n in range(3, n_max + 1):
        for t in triples_for_n(n, minimum):
            yield classify_triple(t, validate=validate, hinted=hinted)


__all__ = [
    "EXCEPTIONAL_TRIPLES",
    "Family",
    "Lattice",
    "LatticeStatus",
    "OracleDisagreement",
    "classify_family",
    "classify_triple",
    "counterexample_triple",
    "enumerate_triples",
    "lattice_status",
    "predicted_mw",
    "region",
    "triples_for_n",
]

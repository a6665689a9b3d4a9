"""Rank-criterion classification of rational obtuse triangle billiards.

Library entry points re-exported here; the CLI lives in trirank.cli.
"""

from .classifier import (
    EXCEPTIONAL_TRIPLES,
    Family,
    Lattice,
    LatticeStatus,
    classify_family,
    classify_triple,
    counterexample_triple,
    enumerate_triples,
    lattice_status,
    predicted_mw,
)
from .criterion import (
    Region,
    Triple,
    Verdict,
    eigenspace_dim,
    in_s,
    is_usable_unit,
    mw_eigen_oracle,
    mw_witness,
    mw_witness_hinted,
    region,
    s_set,
    witness_hints,
)
from .geometry import family3_verdict, moduli_ratio, rational_cosine, star_cylinders
from .jacobsthal import (
    bound_j,
    check_kanold,
    jacobsthal,
    robin_check,
    verify_reduction_chain,
)
from .modular import euler_phi, factorize, mod_inverse, omega, prime_powers_up_to, rep_mod
from .searchverify import beta_search, coverage_check, point_witnesses

__version__ = "0.1.0"

__all__ = [
    "EXCEPTIONAL_TRIPLES",
    "Family",
    "Lattice",
    "LatticeStatus",
    "Region",
    "Triple",
    "Verdict",
    "beta_search",
    "bound_j",
    "check_kanold",
    "classify_family",
    "classify_triple",
    "counterexample_triple",
    "coverage_check",
    "eigenspace_dim",
    "enumerate_triples",
    "euler_phi",
    "factorize",
    "family3_verdict",
    "in_s",
    "is_usable_unit",
    "jacobsthal",
    "lattice_status",
    "mod_inverse",
    "moduli_ratio",
    "mw_eigen_oracle",
    "mw_witness",
    "mw_witness_hinted",
    "omega",
    "point_witnesses",
    "predicted_mw",
    "prime_powers_up_to",
    "rational_cosine",
    "region",
    "rep_mod",
    "robin_check",
    "s_set",
    "star_cylinders",
    "verify_reduction_chain",
    "witness_hints",
]

"""Face numbers, homology and face-ring invariants of Buchsbaum complexes and posets."""
from __future__ import annotations

from .complex import (
    SimplicialComplex,
    euler_characteristic,
    f_from_h,
    f_vector,
    from_facets,
    g_vector,
    h_vector,
    is_neighborly,
    link,
)
from .facering import DEFAULT_PRIME, quotient_dims, random_lsop, socle_dims
from .homology import is_buchsbaum, is_cohen_macaulay, is_homology_manifold, reduced_betti
from .linalg import BACKEND, PrimeField

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_PRIME",
    "PrimeField",
    "SimplicialComplex",
    "euler_characteristic",
    "f_from_h",
    "f_vector",
    "from_facets",
    "g_vector",
    "h_vector",
    "is_buchsbaum",
    "is_cohen_macaulay",
    "is_homology_manifold",
    "is_neighborly",
    "link",
    "quotient_dims",
    "random_lsop",
    "reduced_betti",
    "socle_dims",
]

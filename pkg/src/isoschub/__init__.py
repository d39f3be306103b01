"""Exact Schubert calculus for isotropic Grassmannians.

Computes in the classical, stable, and small quantum cohomology rings of
the symplectic Grassmannians IG(n-k, 2n) and odd orthogonal Grassmannians
OG(n-k, 2n+1): Pieri products with their power-of-two multiplicities,
raising-operator Giambelli polynomials, and quantum products, all in
exact arithmetic over the k-strict partition basis.
"""

from ._pierikernel import BACKEND as kernel_backend
from .giambelli import (
    GiambelliPolynomial,
    giambelli_og,
    quantum_giambelli_ig,
    quantum_giambelli_og,
    raising_expand,
)
from .partitions import (
    IG,
    OG,
    IndexData,
    SpaceContext,
    ell_k,
    enumerate_p,
    in_p,
    index_data,
    is_k_strict,
    k_related,
    rank_function,
    star,
    weight,
)
from .pieri import (
    ArrowWitness,
    arrow_targets,
    classical_pieri,
    quantum_pieri,
    stable_pieri,
)
from .rings import (
    StableRingHandle,
    evaluate_classical,
    evaluate_quantum,
    pi_image,
    pi_tilde_image,
    qh_multiply,
    quantum_product,
    recursion_expand,
    schubert_quantum,
    stable_relation_check,
)

__version__ = "0.1.0"

__all__ = [
    "ArrowWitness",
    "GiambelliPolynomial",
    "IG",
    "IndexData",
    "OG",
    "SpaceContext",
    "StableRingHandle",
    "arrow_targets",
    "classical_pieri",
    "ell_k",
    "enumerate_p",
    "evaluate_classical",
    "evaluate_quantum",
    "giambelli_og",
    "in_p",
    "index_data",
    "is_k_strict",
    "k_related",
    "kernel_backend",
    "pi_image",
    "pi_tilde_image",
    "qh_multiply",
    "quantum_giambelli_ig",
    "quantum_giambelli_og",
    "quantum_pieri",
    "quantum_product",
    "raising_expand",
    "rank_function",
    "recursion_expand",
    "schubert_quantum",
    "stable_pieri",
    "stable_relation_check",
    "star",
    "weight",
]

from .analysis import (
    Classification,
    Decomposition,
    FrameCheck,
    center,
    center_dual_atoms,
    classify,
    decompose,
    dual_frame_check,
    is_geometric,
    is_modular_by_diamonds,
    is_primary,
    meet_irreducibles,
)
from .factorization import extend_factorization
from .families import boolean, chain, m3, n5, product, subspace_lattice
from .lattice import FiniteLattice, build_lattice, iter_bits, lattice_from_order

__all__ = [
    "Classification",
    "Decomposition",
    "FiniteLattice",
    "FrameCheck",
    "boolean",
    "build_lattice",
    "center",
    "center_dual_atoms",
    "chain",
    "classify",
    "decompose",
    "dual_frame_check",
    "extend_factorization",
    "is_geometric",
    "is_modular_by_diamonds",
    "is_primary",
    "iter_bits",
    "lattice_from_order",
    "m3",
    "meet_irreducibles",
    "n5",
    "product",
    "subspace_lattice",
]

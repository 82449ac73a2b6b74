from .params import BeamParams, is_integral, valuation
from .plattice import (
    LatticeOps,
    PLattice,
    canonicalize,
    cone_upper_covers,
    from_hnf,
    frozen,
    join,
    join_all,
    lattice_ops,
    leq,
    lower_covers,
    meet,
    meet_all,
    membership,
    rad,
    soc,
    soc_rad,
    unit,
    upper_covers,
)
from .product import (
    ProductDecomposition,
    ProductElement,
    beam_frozen,
    beam_unit,
    frozen_frame_ok,
    frozen_product,
    meet_product,
    product_decompose,
)
from .profile import (
    DirectLimitReport,
    DualBasisCheck,
    SNFProfile,
    StrongInterval,
    check_dual_basis,
    cone_elements,
    conjugate_partition,
    conjugation_is_identity,
    direct_limit_check,
    dual_basis,
    dually_independent,
    in_cone,
    interval_elements,
    iota_by_joins,
    lower_cover_rad,
    mixed_generators,
    partitions_up_to,
    profiles_by_type,
    random_plattice,
    random_unimodular,
    s_join_atoms,
    snf_exponents,
    snf_profile,
    strong_interval,
    type_representatives,
)

__all__ = [
    "BeamParams",
    "DirectLimitReport",
    "DualBasisCheck",
    "LatticeOps",
    "PLattice",
    "ProductDecomposition",
    "ProductElement",
    "SNFProfile",
    "StrongInterval",
    "beam_frozen",
    "beam_unit",
    "canonicalize",
    "check_dual_basis",
    "cone_elements",
    "cone_upper_covers",
    "conjugate_partition",
    "conjugation_is_identity",
    "direct_limit_check",
    "dual_basis",
    "dually_independent",
    "from_hnf",
    "frozen",
    "frozen_frame_ok",
    "frozen_product",
    "in_cone",
    "interval_elements",
    "iota_by_joins",
    "is_integral",
    "join",
    "join_all",
    "lattice_ops",
    "leq",
    "lower_cover_rad",
    "lower_covers",
    "meet",
    "meet_all",
    "meet_product",
    "membership",
    "mixed_generators",
    "partitions_up_to",
    "product_decompose",
    "profiles_by_type",
    "rad",
    "random_plattice",
    "random_unimodular",
    "s_join_atoms",
    "snf_exponents",
    "snf_profile",
    "soc",
    "soc_rad",
    "strong_interval",
    "type_representatives",
    "unit",
    "upper_covers",
    "valuation",
]

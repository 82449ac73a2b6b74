from .beams import (
    BeamDecomposition,
    RigidityMap,
    SemibeamDecomposition,
    beam_decompose,
    components_at,
    minimal_shift,
    permutation_under_right_mult,
    rigidity_map,
    semibeam_decompose,
    semibeam_elements,
    semibeam_unique,
)
from .center import (
    IntervalAnalysis,
    Scaffold,
    analysis_summary,
    conjugation,
    conjugation_is_automorphism,
    frozen_power,
    frozen_table,
    interval_analysis,
    scaffold,
    ulm_counts,
)
from .cone import DegreeData, Germ, Word, format_word
from .corpus import BUILTIN_GERMS, free_abelian_germ, klein_germ, product_germ
from .fraction import (
    FractionOps,
    GermFraction,
    embed,
    fraction_deg,
    fraction_inverse,
    fraction_join,
    fraction_leq,
    fraction_meet,
    fraction_mul,
    fraction_ops,
    reduce_fraction,
    s_power,
)
from .table import GermReport, GermTable, divisibility_lattice, validate_germ

__all__ = [
    "BUILTIN_GERMS",
    "BeamDecomposition",
    "DegreeData",
    "FractionOps",
    "Germ",
    "GermFraction",
    "GermReport",
    "GermTable",
    "IntervalAnalysis",
    "RigidityMap",
    "Scaffold",
    "SemibeamDecomposition",
    "Word",
    "analysis_summary",
    "beam_decompose",
    "components_at",
    "conjugation",
    "conjugation_is_automorphism",
    "divisibility_lattice",
    "embed",
    "format_word",
    "fraction_deg",
    "fraction_inverse",
    "fraction_join",
    "fraction_leq",
    "fraction_meet",
    "fraction_mul",
    "fraction_ops",
    "free_abelian_germ",
    "frozen_power",
    "frozen_table",
    "interval_analysis",
    "klein_germ",
    "minimal_shift",
    "permutation_under_right_mult",
    "product_germ",
    "reduce_fraction",
    "rigidity_map",
    "s_power",
    "scaffold",
    "semibeam_decompose",
    "semibeam_elements",
    "semibeam_unique",
    "ulm_counts",
    "validate_germ",
]

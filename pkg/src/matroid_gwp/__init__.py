"""Exact generalized weight polynomials, Tutte polynomials and Stanley-Reisner
Betti numbers for matroids and linear codes."""

from .betti import (
    GradedBettiTable,
    HomologyDims,
    all_betti_tables,
    betti_sigma,
    betti_support_shift_check,
    graded_betti_table,
    homology_dims_oracle,
)
from .codes import (
    LinearCode,
    WeightDistribution,
    brute_force_distribution,
    code_from_generator,
    code_from_parity_check,
    extended_weight_polynomials,
    puncture,
    shorten,
)
from .gf import FieldMatrix, FiniteField, field, kernel_basis, matrix, rank_of, vector_matroid
from .matroid import (
    Matroid,
    circuits,
    dual,
    elongate,
    euler_characteristic,
    from_bases,
    nullity,
    rank,
    restrict,
    uniform,
)
from .polys import BiPoly, TriPoly, UniPoly
from .weights import (
    WeightHierarchy,
    enumerator,
    enumerator_from_tutte,
    gwp_complement_form,
    gwp_direct,
    gwp_elongation_shift,
    gwp_from_betti,
    higher_weights,
    higher_weights_from_betti,
    higher_weights_from_gwp,
    tutte,
    tutte_from_enumerator,
)

__version__ = "0.1.0"

__all__ = [
    "all_betti_tables",
    "betti_sigma",
    "betti_support_shift_check",
    "BiPoly",
    "brute_force_distribution",
    "circuits",
    "code_from_generator",
    "code_from_parity_check",
    "dual",
    "elongate",
    "enumerator",
    "enumerator_from_tutte",
    "euler_characteristic",
    "extended_weight_polynomials",
    "field",
    "FieldMatrix",
    "FiniteField",
    "from_bases",
    "graded_betti_table",
    "GradedBettiTable",
    "gwp_complement_form",
    "gwp_direct",
    "gwp_elongation_shift",
    "gwp_from_betti",
    "higher_weights",
    "higher_weights_from_betti",
    "higher_weights_from_gwp",
    "homology_dims_oracle",
    "HomologyDims",
    "kernel_basis",
    "LinearCode",
    "matrix",
    "Matroid",
    "nullity",
    "puncture",
    "rank",
    "rank_of",
    "restrict",
    "shorten",
    "TriPoly",
    "tutte",
    "tutte_from_enumerator",
    "uniform",
    "UniPoly",
    "vector_matroid",
    "WeightDistribution",
    "WeightHierarchy",
]

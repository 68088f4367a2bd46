"""Projective geometry over the complex, dual and double numbers, in exact arithmetic."""

from .cross_ratio import (
    CrossRatioValue,
    Perm4,
    cross_ratio,
    f_rho,
    original_cross_ratio,
    permute,
)
from .cycles import (
    CycleMatrix,
    concyclic,
    cycle_product,
    cycle_through,
    is_cycle_orthogonal,
    is_projective_orthogonal,
    on_cycle,
    pullback,
    pushforward,
)
from .hypercomplex import COMPLEX, DOUBLE, DUAL, HyperNumber, Kind, NumberClass
from .lobachevsky import d_proj, delta, distance, hyperbolic_forms, rho_classical
from .moebius import MoebiusMatrix, make, pgl_equal, three_point_map, to_zero_one_inf
from .projective import (
    PointClass,
    ProjPoint,
    canonicalize,
    classify_point,
    embed,
    equivalent,
    essentially_distinct,
    infinity,
    one,
    project,
    zero,
)

__all__ = [
    "COMPLEX", "DOUBLE", "DUAL", "CrossRatioValue", "CycleMatrix", "HyperNumber", "Kind",
    "MoebiusMatrix", "NumberClass", "Perm4", "PointClass", "ProjPoint", "canonicalize",
    "classify_point", "concyclic", "cross_ratio", "cycle_product", "cycle_through", "d_proj",
    "delta", "distance", "embed", "equivalent", "essentially_distinct", "f_rho",
    "hyperbolic_forms", "infinity", "is_cycle_orthogonal", "is_projective_orthogonal", "make",
    "on_cycle", "one", "original_cross_ratio", "permute", "pgl_equal", "project", "pullback",
    "pushforward", "rho_classical", "three_point_map", "to_zero_one_inf", "zero",
]

from .monotone import (
    MonotoneTriangle,
    asm_statistics,
    asm_to_mt,
    enumerate_asms,
    enumerate_gt_patterns,
    enumerate_monotone_triangles,
    gt_count_formula,
    is_asm,
    mt_count,
    mt_generating_function,
    mt_to_asm,
)
from .stats import StatVector
from .sttree import STTree, STTreeShape, enumerate_st_trees
from .trapezoids import (
    GogPentagon,
    GogTrapezoid,
    MagogTrapezoid,
    conjecture_check,
    enumerate_gog_pentagons,
    enumerate_gog_trapezoids,
    enumerate_magog_trapezoids,
)

__all__ = [
    "GogPentagon",
    "GogTrapezoid",
    "MagogTrapezoid",
    "MonotoneTriangle",
    "STTree",
    "STTreeShape",
    "StatVector",
    "asm_statistics",
    "asm_to_mt",
    "conjecture_check",
    "enumerate_asms",
    "enumerate_gog_pentagons",
    "enumerate_gog_trapezoids",
    "enumerate_gt_patterns",
    "enumerate_magog_trapezoids",
    "enumerate_monotone_triangles",
    "enumerate_st_trees",
    "gt_count_formula",
    "is_asm",
    "mt_count",
    "mt_generating_function",
    "mt_to_asm",
]

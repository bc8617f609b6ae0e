"""Decomposed Richelot isogenies, generalized Howe curves and superspeciality
checks for hyperelliptic curves over small finite fields."""
from .cartier import cartier_matrix, congruence_scan, is_superspecial, is_supersingular_elliptic
from .curves import INF, BranchDivisor, HyperCurve, branch_divisor, curve_from_ints, new_curve
from .errors import RichelotError
from .ff import Fq, FieldCtx, embed, make_field
from .howe import HoweInput, build_howe, genus_formulas, howe_input_from_curves
from .involution import (
    MobiusMap,
    SearchConfig,
    analyze,
    decompose,
    find_branch_involutions,
    geometrically_isomorphic,
    normalize_involution,
)
from .upoly import Poly, roots_in_field, splitting_context

__all__ = [
    "INF", "BranchDivisor", "FieldCtx", "Fq", "HoweInput", "HyperCurve", "MobiusMap", "Poly",
    "RichelotError", "SearchConfig", "analyze", "branch_divisor", "build_howe", "cartier_matrix",
    "congruence_scan", "curve_from_ints", "decompose", "embed", "find_branch_involutions",
    "genus_formulas", "geometrically_isomorphic", "howe_input_from_curves", "is_superspecial",
    "is_supersingular_elliptic", "make_field", "new_curve", "normalize_involution",
    "roots_in_field", "splitting_context",
]

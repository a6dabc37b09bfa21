"""Closed-form routes: constant-term expressions, path determinants and
the identity verifiers backing them.

Everything here has an independent counterpart in triangles/ or
operators.py; the test suite holds the routes together wherever their
domains overlap.
"""

from .gog import (
    gog_bottom_rows,
    gog_ct,
    gog_ct_fixed_minima,
    gog_ct_minmax_m0,
    gog_ct_total,
)
from .identities import (
    asm_determinants,
    asm_number,
    verify_antisymmetrizer_identities,
    verify_behrend_limits,
    verify_lemma_zeilberger,
    verify_summation_identity,
    verify_symmetrizer_mt,
    verify_theorem_zeil,
)
from .magog import (
    magog_bottom_rows,
    magog_ct_bottom,
    magog_ct_fixed_minima,
    magog_ct_total,
    magog_lgv_det,
    magog_q_slice_det,
    magog_v2_det,
)
from .mt import ct_mt, ct_mt_top, ct_st_tree
from .pentagon import pentagon_bottom_rows, pentagon_ct

__all__ = [
    "asm_determinants",
    "asm_number",
    "verify_antisymmetrizer_identities",
    "verify_behrend_limits",
    "verify_lemma_zeilberger",
    "verify_summation_identity",
    "verify_symmetrizer_mt",
    "verify_theorem_zeil",
    "ct_mt",
    "ct_mt_top",
    "ct_st_tree",
    "gog_bottom_rows",
    "gog_ct",
    "gog_ct_fixed_minima",
    "gog_ct_minmax_m0",
    "gog_ct_total",
    "pentagon_bottom_rows",
    "pentagon_ct",
    "magog_bottom_rows",
    "magog_ct_bottom",
    "magog_ct_fixed_minima",
    "magog_ct_total",
    "magog_lgv_det",
    "magog_q_slice_det",
    "magog_v2_det",
]

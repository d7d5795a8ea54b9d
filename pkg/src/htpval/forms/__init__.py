"""Diagonal quadratic forms: semiring operations, isotropy over Q, bounded
witness search, and reduction to residue forms under a valuation."""

from .diagonal import DiagonalForm, IsotropyVerdict, orth_sum, pfister, tensor
from .hilbert import REAL, factor_int, hilbert_symbol, isotropic_over_Q, squarefree_part
from .search import escalating_search, witness_search

__all__ = [
    "REAL",
    "DiagonalForm",
    "IsotropyVerdict",
    "escalating_search",
    "factor_int",
    "hilbert_symbol",
    "isotropic_over_Q",
    "orth_sum",
    "pfister",
    "squarefree_part",
    "tensor",
    "witness_search",
]

from .residue import hensel_isotropy_lift, residue_split  # noqa: E402

__all__ += ["hensel_isotropy_lift", "residue_split"]

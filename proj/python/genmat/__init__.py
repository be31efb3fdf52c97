"""Exact invariants and identities of generic matrix rings."""

from _genmat import (
    __version__,
    amitsur_levitzki_zero,
    delta_membership,
    dimension_series,
    gr_dim,
    invariant_basis,
    invariant_dim,
    kostka,
    lemma5_ok,
    lemma_elem_ok,
    multiplicity_table,
    prop_grass_ok,
    reference_exponent,
    trace_identity_ok,
    weight_space_dim,
)

__all__ = [
    "__version__",
    "amitsur_levitzki_zero",
    "delta_membership",
    "dimension_series",
    "gr_dim",
    "invariant_basis",
    "invariant_dim",
    "kostka",
    "lemma5_ok",
    "lemma_elem_ok",
    "multiplicity_table",
    "prop_grass_ok",
    "reference_exponent",
    "trace_identity_ok",
    "weight_space_dim",
]

"""Generalised Heawood graphs H_k and triangulated tori T_k."""

from ._core import (
    CapExceeded,
    HeawoodError,
    HeawoodGraph,
    SimplicialComplex,
    automorphism_group,
    chromatic_number,
    complex_from_facets,
    dk,
    fundamental_vectors,
    fvector_factors,
    fvector_formula,
    general_quotient,
    generated_group_order,
    hamiltonian_alternating,
    hamiltonian_backtracking,
    heawood_graph,
    heawood_number,
    is_bipartite,
    klein_quartic,
    klein_quartic_aut_orders,
    quotient_order,
    reduce_to_fundamental,
    render_svg,
    six_cycles_through,
    torus,
    verify_exceptional_W,
)

__all__ = [name for name in dir() if not name.startswith("_")]

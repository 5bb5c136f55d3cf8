"""Exact verification workbench for classical and quantum Yang-Baxter structures."""

from ._core import (
    bd_triples_json,
    catalog_ids,
    catalog_json,
    chain_commute_sampled,
    chain_hamiltonian_gap_scalar,
    cybe_residual_is_zero,
    enumerate_bd_count,
    quasi_constant,
    scaling_identity_is_zero,
    sl2_rational_qybe_zero,
    subalgebra_oracle_passes,
    suite,
    unitarity_residual_is_zero,
)

__all__ = [
    "bd_triples_json",
    "catalog_ids",
    "catalog_json",
    "chain_commute_sampled",
    "chain_hamiltonian_gap_scalar",
    "cybe_residual_is_zero",
    "enumerate_bd_count",
    "quasi_constant",
    "scaling_identity_is_zero",
    "sl2_rational_qybe_zero",
    "subalgebra_oracle_passes",
    "suite",
    "unitarity_residual_is_zero",
]

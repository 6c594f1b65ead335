"""Exact enumeration of well-labelled multigraphs via symmetric series.

The pipeline: an exponential generating series over power sums encodes
assemblies of weighted edges; substituting the degree-2 kernel re-grades it
by vertex degrees; Hall-pairing against products of complete homogeneous
functions extracts exact counts.  A brute-force matrix enumerator provides
independent ground truth at small sizes.
"""
from .extraction import (
    CountTable,
    count_degree_sequence,
    count_table,
    m_h_duality_check,
    scalar_product,
)
from .graph_series import (
    WeightProfile,
    a_coeffs_compositions,
    a_coeffs_log,
    build_F,
    build_G,
    build_G_plethysm,
)
from .oracle import OracleConfig, count_matrices, oracle_m_coefficient
from .plethysm import e2_inner, h2_inner, pleth_p
from .series import (
    Basis,
    ConsistencyError,
    SymSeries,
    e_in_p,
    exp_series,
    h_in_p,
    m_in_p,
    p_to_m,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "ConsistencyError",
    "CountTable",
    "OracleConfig",
    "SymSeries",
    "WeightProfile",
    "a_coeffs_compositions",
    "a_coeffs_log",
    "build_F",
    "build_G",
    "build_G_plethysm",
    "count_degree_sequence",
    "count_matrices",
    "count_table",
    "e2_inner",
    "e_in_p",
    "exp_series",
    "h2_inner",
    "h_in_p",
    "m_h_duality_check",
    "m_in_p",
    "oracle_m_coefficient",
    "p_to_m",
    "pleth_p",
    "scalar_product",
]

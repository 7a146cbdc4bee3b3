"""Exact cut-norms, Rademacher chaos norms and hypergraph discrepancy by enumeration."""

from .core import (
    BudgetExceeded,
    CoeffTensor,
    Coloring,
    InvariantError,
    MixedNormProfile,
    ParseError,
    SignPattern,
    SimplexCoeffs,
    WeightedHypergraph,
    build_bipartite,
    build_complete,
    chaos_coeffs,
    parse_hypergraph,
    parse_tensor,
    rademacher_eval,
)
from .discrepancy import (
    DiscResult,
    balance,
    disc_exact,
    disc_for_coloring,
    disc_monte_carlo,
    expected_disc_exact,
)
from .norms import (
    NormResult,
    cut_norm,
    cut_norm_star,
    decouple,
    linf_chaos,
    linf_multiple,
    lp_rademacher_exact,
    mixed_norm_profile,
    opnorm_inf_to_1,
)

__version__ = "0.1.0"

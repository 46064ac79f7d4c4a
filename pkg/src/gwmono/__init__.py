"""Concurrence and unified-(q, s) entanglement monogamy toolkit for
generalized W-class qudit states."""

from .concurrence import (
    BlockCut,
    PairKind,
    PairSource,
    concurrence_pure,
    gw_block_concurrence_oracle,
    pair_decomposition_residual,
    pair_source_comparison,
    printed_pair_concurrence_sq,
    wootters_concurrence,
)
from .monogamy import (
    MARGIN_TOL,
    Hypothesis,
    HypothesisNotMet,
    MonogamyReport,
    baseline_lower_bound,
    bound_comparison_series,
    chained_lower_bound,
    chained_lower_bound_folded,
    check_beta_lower_bound,
    check_beta_upper_bound,
    check_chained,
    check_power_monogamy,
    check_squared_monogamy,
    check_tightened,
    fractional_power_gaps,
    power_difference_gap,
    tightened_lower_bound,
)
from .residual import (
    PREResult,
    block_residual,
    block_residual_table,
    pairwise_residual,
    pairwise_residual_general,
    pairwise_residual_table,
    region_q_grid,
    residual_chain_check,
)
from .states import (
    DensityMatrix,
    GWState,
    GWVState,
    Partition,
    PureStateVector,
    load_state_json,
    make_gw_state,
    make_gwv_state,
    purity,
    reduce,
    to_state_vector,
    uniform_w_state,
)
from .unified import (
    UEParams,
    convex_roof_ue_rank2,
    f_qs,
    f_qs_raw,
    g_qs,
    in_region_r,
    region_lower_q,
    region_upper_q,
    ue_gw_reduced,
    ue_pure,
    unified_entropy,
    unified_entropy_raw,
)

__version__ = "0.1.0"

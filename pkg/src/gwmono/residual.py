"""Partition-dependent residual entanglement for two-level block cuts.

The block residual is the slack of the squared-entanglement monogamy chain
for a cut of sites 1..n into blocks 1..m | m+1..n with inner split points
``a`` and ``b``:

* block form: top-cut value minus the four sub-block pair terms;
* pairwise form: top-cut value minus all cross site-pair terms.

Pair values come from one of two sources (see :mod:`gwmono.concurrence`):
``printed`` reproduces the published reference tables bit-for-bit, ``oracle``
uses the reduction pipeline and is the verified route.  Outputs always record
their source because the two disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .concurrence import (
    BlockCut,
    PairKind,
    PairSource,
    oracle_pair_concurrence_sq,
    printed_pair_concurrence_sq,
)
from .monogamy import Hypothesis, HypothesisNotMet, MonogamyReport, StateLike, _as_vector
from .states import to_state_vector, uniform_w_state
from .unified import UEParams, g_qs, in_region_r, region_lower_q, region_upper_q


@dataclass(frozen=True)
class PREResult:
    """One residual value with everything needed to reproduce it."""

    kind: str  # "block" or "pairwise"
    n: int
    m: int
    a: int | None
    b: int | None
    params: UEParams
    source: PairSource
    value: float

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "a": self.a,
            "b": self.b,
            "q": self.params.q,
            "s": self.params.s,
            "source": self.source.value,
            "value": self.value,
        }


def _require_region(params: UEParams) -> None:
    if not in_region_r(params):
        raise HypothesisNotMet(
            [
                Hypothesis(
                    "params_in_validity_region", False, f"q={params.q}, s={params.s}"
                )
            ]
        )


def _sub_pair_csq(cut: BlockCut, source: PairSource) -> list[float]:
    """Squared concurrences of the four sub-block pairs; empty blocks give 0."""
    source = PairSource(source)
    kinds = (PairKind.FRONT_FRONT, PairKind.BACK_FRONT, PairKind.FRONT_BACK, PairKind.BACK_BACK)
    if source is PairSource.PRINTED:
        return [printed_pair_concurrence_sq(cut, kind) for kind in kinds]
    psi = to_state_vector(uniform_w_state(cut.n))
    sub = cut.sub_blocks()
    pairs = (
        (sub["front1"], sub["front2"]),
        (sub["back1"], sub["front2"]),
        (sub["front1"], sub["back2"]),
        (sub["back1"], sub["back2"]),
    )
    return [oracle_pair_concurrence_sq(psi, bp, bq) for bp, bq in pairs]


def _top_csq(cut: BlockCut, source: PairSource) -> float:
    if PairSource(source) is PairSource.PRINTED:
        return printed_pair_concurrence_sq(cut, PairKind.TOP)
    psi = to_state_vector(uniform_w_state(cut.n))
    return oracle_pair_concurrence_sq(psi, cut.block1, cut.block2)


def _site_pair_csq(n: int, source: PairSource) -> float:
    if PairSource(source) is PairSource.PRINTED:
        return printed_pair_concurrence_sq(BlockCut(n, 1, 1, 2), PairKind.SITE_PAIR)
    psi = to_state_vector(uniform_w_state(n))
    return oracle_pair_concurrence_sq(psi, (1,), (2,))


def block_residual(
    cut: BlockCut,
    params: UEParams,
    source: Union[PairSource, str] = PairSource.PRINTED,
) -> PREResult:
    """Block-form residual of the uniform W state of ``cut.n`` sites.

    ``g^2`` of the top-cut squared concurrence minus the four sub-block pair
    terms, with the pair values taken from the requested source.
    """
    _require_region(params)
    source = PairSource(source)
    value = g_qs(_top_csq(cut, source), params) ** 2 - sum(
        g_qs(csq, params) ** 2 for csq in _sub_pair_csq(cut, source)
    )
    return PREResult(
        kind="block", n=cut.n, m=cut.m, a=cut.a, b=cut.b,
        params=params, source=source, value=float(value),
    )


def pairwise_residual(
    n: int,
    m: int,
    params: UEParams,
    source: Union[PairSource, str] = PairSource.PRINTED,
) -> PREResult:
    """Pairwise-form residual of the uniform W state: all site pairs are identical.

    ``g^2`` of the top-cut value minus ``m (n - m)`` copies of the site-pair
    term.
    """
    if not 1 <= m <= n - 1:
        raise ValueError(f"need 1 <= m <= n-1, got m={m}, n={n}")
    _require_region(params)
    source = PairSource(source)
    cut = BlockCut(n=n, m=m, a=m, b=n)  # only the top split matters here
    value = g_qs(_top_csq(cut, source), params) ** 2 - m * (n - m) * g_qs(
        _site_pair_csq(n, source), params
    ) ** 2
    return PREResult(
        kind="pairwise", n=n, m=m, a=None, b=None,
        params=params, source=source, value=float(value),
    )


def pairwise_residual_general(
    state: StateLike, m: int, params: UEParams
) -> float:
    """Pairwise-form residual of an arbitrary W-class state through the oracle.

    Splits sites 1..n at ``m`` and subtracts every cross site-pair term from
    the top-cut value explicitly.
    """
    _require_region(params)
    psi = _as_vector(state)
    n = psi.n_sites
    if not 1 <= m <= n - 1:
        raise ValueError(f"need 1 <= m <= n-1, got m={m}, n={n}")
    block1 = tuple(range(1, m + 1))
    block2 = tuple(range(m + 1, n + 1))
    top = g_qs(oracle_pair_concurrence_sq(psi, block1, block2), params) ** 2
    pair_sum = sum(
        g_qs(oracle_pair_concurrence_sq(psi, (i,), (j,)), params) ** 2
        for i in block1
        for j in block2
    )
    return float(top - pair_sum)


def block_residual_table(
    q_values: Sequence[float],
    a_values: Sequence[int],
    *,
    n: int,
    m: int,
    b: int,
    s: float = 1.0,
    source: Union[PairSource, str] = PairSource.PRINTED,
) -> list[list[float]]:
    """Block residuals on a (q, a) grid; one row per ``q``, one column per ``a``."""
    source = PairSource(source)
    per_a = []
    for a in a_values:
        cut = BlockCut(n=n, m=m, a=a, b=b)
        per_a.append((_top_csq(cut, source), _sub_pair_csq(cut, source)))
    rows = []
    for q in q_values:
        params = UEParams(q=float(q), s=float(s))
        _require_region(params)
        row = []
        for top, pairs in per_a:
            row.append(
                float(g_qs(top, params) ** 2 - sum(g_qs(c, params) ** 2 for c in pairs))
            )
        rows.append(row)
    return rows


def pairwise_residual_table(
    q_values: Sequence[float],
    m_values: Sequence[int],
    *,
    n: int,
    s: float = 1.0,
    source: Union[PairSource, str] = PairSource.PRINTED,
) -> list[list[float]]:
    """Pairwise residuals on a (q, m) grid; one row per ``q``, one column per ``m``."""
    source = PairSource(source)
    site_csq = _site_pair_csq(n, source)
    tops = [
        _top_csq(BlockCut(n=n, m=m, a=m, b=n), source) for m in m_values
    ]
    rows = []
    for q in q_values:
        params = UEParams(q=float(q), s=float(s))
        _require_region(params)
        site_term = g_qs(site_csq, params) ** 2
        row = [
            float(g_qs(top, params) ** 2 - m * (n - m) * site_term)
            for m, top in zip(m_values, tops)
        ]
        rows.append(row)
    return rows


def region_q_grid(s: float, points: int = 50) -> np.ndarray:
    """Evenly spaced admissible ``q`` grid at a given ``s``."""
    hi = region_upper_q(s)
    if not math.isfinite(hi):
        raise ValueError("upper q bound is infinite at s = 0; choose the grid explicitly")
    return np.linspace(region_lower_q(s), hi, points)


def residual_chain_check(
    state: StateLike, cut: BlockCut, params: UEParams
) -> MonogamyReport:
    """Verify the three-tier squared-entanglement chain on an arbitrary W-class state.

    Tier 1 is the top block cut, tier 2 the four sub-block pairs, tier 3 all
    cross site pairs; the chain requires tier1 >= tier2 >= tier3.  All values
    go through the oracle.  The report carries each tier and the block and
    pairwise residuals; its margin is the smallest chain gap.
    """
    _require_region(params)
    psi = _as_vector(state)
    if psi.n_sites != cut.n:
        raise ValueError(f"cut is for {cut.n} sites but state has {psi.n_sites}")

    tier1 = g_qs(oracle_pair_concurrence_sq(psi, cut.block1, cut.block2), params) ** 2
    sub = cut.sub_blocks()
    pairs = (
        (sub["front1"], sub["front2"]),
        (sub["back1"], sub["front2"]),
        (sub["front1"], sub["back2"]),
        (sub["back1"], sub["back2"]),
    )
    tier2 = float(
        sum(g_qs(oracle_pair_concurrence_sq(psi, bp, bq), params) ** 2 for bp, bq in pairs)
    )
    tier3 = float(
        sum(
            g_qs(oracle_pair_concurrence_sq(psi, (i,), (j,)), params) ** 2
            for i in cut.block1
            for j in cut.block2
        )
    )
    block_gap = tier1 - tier2
    refine_gap = tier2 - tier3
    return MonogamyReport(
        inequality_id="residual-chain",
        lhs=tier1,
        rhs=tier2,
        margin=min(block_gap, refine_gap),
        hypotheses=(
            Hypothesis("params_in_validity_region", True, f"q={params.q}, s={params.s}"),
        ),
        params={
            "q": params.q,
            "s": params.s,
            "n": cut.n,
            "m": cut.m,
            "a": cut.a,
            "b": cut.b,
            "tier1": tier1,
            "tier2": tier2,
            "tier3": tier3,
            "block_residual": block_gap,
            "refine_gap": refine_gap,
            "pairwise_residual": tier1 - tier3,
        },
    )

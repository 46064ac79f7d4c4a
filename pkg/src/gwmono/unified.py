"""Unified two-parameter (q, s) entropy and entanglement machinery.

All logarithms are natural (nats).  No base is fixed by the defining
formula ``U = [(tr rho^q)^s - 1] / ((1-q) s)`` and nats keep its algebraic
limits exact; note that entanglement of formation is conventionally quoted
in bits, so values from the ``q -> 1`` regime here differ from that
convention by a factor ``ln 2``.

Near the removable singularities of the defining formula the closed limit
expression is evaluated instead of the raw formula: ``q`` within 1e-6 of 1
(von Neumann), ``s`` below 1e-6 (Renyi-q) and ``s`` within 1e-6 of 1
(Tsallis-q).  ``*_raw`` variants evaluate the raw formula with no dispatch,
for checking the limits themselves.

``f_qs`` maps a concurrence value to the unified entanglement of a
Schmidt-rank-2 pure state; ``g_qs`` is the same map on squared concurrence
(``g_qs(x**2) == f_qs(x)``).  The analytic map is valid on a bounded
parameter region; membership is exposed as :func:`in_region_r`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .states import DensityMatrix, PureStateVector

Q_ONE_WINDOW = 1e-6
S_ZERO_WINDOW = 1e-6
S_ONE_WINDOW = 1e-6

_DOMAIN_SLACK = 1e-12
_SINGULARITY_WINDOW = 1e-9
_RANK_TOL = 1e-10


@dataclass(frozen=True)
class UEParams:
    """Entropy parameters ``q > 0`` and ``s >= 0`` plus derived regime flags."""

    q: float
    s: float

    def __post_init__(self) -> None:
        q, s = float(self.q), float(self.s)
        if not q > 0.0:
            raise ValueError(f"q must be positive, got {q}")
        if s < 0.0:
            raise ValueError(f"s must be non-negative, got {s}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", s)

    @property
    def regime(self) -> str:
        if abs(self.q - 1.0) < Q_ONE_WINDOW:
            return "q_near_1"
        if self.s < S_ZERO_WINDOW:
            return "s_near_0"
        if abs(self.s - 1.0) < S_ONE_WINDOW:
            return "s_near_1"
        return "generic"

    @property
    def in_region_r(self) -> bool:
        return in_region_r(self)

    @property
    def satisfies_basic_bounds(self) -> bool:
        """The plain validity bounds ``q >= 1``, ``0 <= s <= 1``, ``qs <= 3``."""
        return self.q >= 1.0 and 0.0 <= self.s <= 1.0 and self.q * self.s <= 3.0


def region_lower_q(s: float) -> float:
    """Lower admissible ``q`` at a given ``s`` in [0, 1].

    The defining expression has a removable singularity at ``s = 2/3``; the
    limiting value 3/4 is used inside a 1e-9 window around it.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    den = 2.0 * (2.0 - 3.0 * s)
    if abs(den) < 2.0 * _SINGULARITY_WINDOW:
        return 0.75
    return (math.sqrt(9.0 * s**2 - 24.0 * s + 28.0) - (2.0 + 3.0 * s)) / den


def region_upper_q(s: float) -> float:
    """Upper admissible ``q`` at a given ``s`` in [0, 1]; infinite at ``s = 0``."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    if s == 0.0:
        return math.inf
    return (5.0 + math.sqrt(13.0)) / (2.0 * s)


def in_region_r(params: Union[UEParams, tuple[float, float]]) -> bool:
    """Whether ``(q, s)`` lies in the validity region of the analytic map."""
    if isinstance(params, UEParams):
        q, s = params.q, params.s
    else:
        q, s = float(params[0]), float(params[1])
    if not 0.0 <= s <= 1.0:
        return False
    return region_lower_q(s) <= q <= region_upper_q(s)


def _clamped_unit(value: float, name: str) -> float:
    v = float(value)
    if not -_DOMAIN_SLACK <= v <= 1.0 + _DOMAIN_SLACK:
        raise ValueError(f"{name} must lie in [0, 1], got {v}")
    return min(max(v, 0.0), 1.0)


def _f_from_u(u: float, params: UEParams) -> float:
    """Entanglement value from ``u = sqrt(1 - C^2)`` via the regime-dispatched formula."""
    lam_hi = (1.0 + u) / 2.0
    lam_lo = (1.0 - u) / 2.0
    regime = params.regime
    if regime == "q_near_1":
        out = 0.0
        for lam in (lam_hi, lam_lo):
            if lam > 0.0:
                out -= lam * math.log(lam)
        return out
    power_sum = lam_hi**params.q + lam_lo**params.q
    if regime == "s_near_0":
        return math.log(power_sum) / (1.0 - params.q)
    if regime == "s_near_1":
        return (power_sum - 1.0) / (1.0 - params.q)
    return (power_sum**params.s - 1.0) / ((1.0 - params.q) * params.s)


def f_qs(x: float, params: UEParams) -> float:
    """Unified entanglement of a Schmidt-rank-2 pure state with concurrence ``x``."""
    x = _clamped_unit(x, "concurrence")
    return _f_from_u(math.sqrt(max(0.0, 1.0 - x * x)), params)


def g_qs(y: float, params: UEParams) -> float:
    """Same map on squared concurrence: ``g_qs(y) == f_qs(sqrt(y))``."""
    y = _clamped_unit(y, "squared concurrence")
    return _f_from_u(math.sqrt(max(0.0, 1.0 - y)), params)


def f_qs_raw(x: float, q: float, s: float) -> float:
    """Raw formula with no limit-regime dispatch (unstable near q=1 and s=0)."""
    x = _clamped_unit(x, "concurrence")
    u = math.sqrt(max(0.0, 1.0 - x * x))
    power_sum = ((1.0 + u) / 2.0) ** q + ((1.0 - u) / 2.0) ** q
    return (power_sum**s - 1.0) / ((1.0 - q) * s)


def _entropy_rows(lams: np.ndarray, params: UEParams) -> np.ndarray:
    """Unified entropy for each row of a (batch, k) spectrum array."""
    lams = np.clip(np.atleast_2d(lams), 0.0, None)
    regime = params.regime
    if regime == "q_near_1":
        terms = np.where(lams > 0.0, lams * np.log(np.where(lams > 0.0, lams, 1.0)), 0.0)
        return -np.sum(terms, axis=1)
    power_sum = np.sum(lams**params.q, axis=1)
    if regime == "s_near_0":
        return np.log(power_sum) / (1.0 - params.q)
    if regime == "s_near_1":
        return (power_sum - 1.0) / (1.0 - params.q)
    return (power_sum**params.s - 1.0) / ((1.0 - params.q) * params.s)


def unified_entropy(rho: DensityMatrix, params: UEParams) -> float:
    """Unified (q, s) entropy of a density matrix, in nats."""
    return float(_entropy_rows(rho.spectrum()[None, :], params)[0])


def unified_entropy_raw(rho: DensityMatrix, q: float, s: float) -> float:
    """Raw ``[(tr rho^q)^s - 1]/((1-q) s)`` with no limit-regime dispatch."""
    power_sum = float(np.sum(rho.spectrum() ** q))
    return (power_sum**s - 1.0) / ((1.0 - q) * s)


def ue_pure(psi: PureStateVector, side_a: Iterable[int], params: UEParams) -> float:
    """Unified entanglement of a pure state across the cut ``side_a | rest``."""
    side = sorted({int(s) for s in side_a})
    n = psi.n_sites
    if not side or len(side) >= n:
        raise ValueError("side A must be a proper non-empty subset of the sites")
    if side[0] < 1 or side[-1] > n:
        raise ValueError(f"sites {side} out of range 1..{n}")
    keep0 = [s - 1 for s in side]
    rest0 = [i for i in range(n) if i not in set(keep0)]
    mat = np.transpose(psi.amps.reshape(psi.dims), keep0 + rest0).reshape(
        math.prod(psi.dims[i] for i in keep0), -1
    )
    spectrum = np.linalg.svd(mat, compute_uv=False) ** 2
    return float(_entropy_rows(spectrum[None, :], params)[0])


def ue_gw_reduced(concurrence: float, params: UEParams) -> float:
    """Unified entanglement of a W-class reduction with the given concurrence.

    For W-class reductions the convex-roof value is the analytic map
    evaluated at the concurrence; callers are responsible for staying inside
    the validity region.
    """
    return f_qs(concurrence, params)


def _isometry_from_angles(angles: np.ndarray, m: int, r: int) -> np.ndarray:
    """m x r isometry from Givens angles plus relative source-column phases."""
    rows: list[list[complex]] = [[0j] * r for _ in range(m)]
    for k in range(r):
        rows[k][k] = 1.0 + 0j
    idx = 0
    for i in range(m - 1):
        for j in range(i + 1, m):
            c = math.cos(angles[idx])
            sv = math.sin(angles[idx])
            phase = complex(math.cos(angles[idx + 1]), math.sin(angles[idx + 1]))
            idx += 2
            row_i = rows[i]
            row_j = rows[j]
            for k in range(r):
                a, b = row_i[k], row_j[k]
                row_i[k] = c * a + phase * sv * b
                row_j[k] = -phase.conjugate() * sv * a + c * b
    for k in range(1, r):
        phase = complex(math.cos(angles[idx]), math.sin(angles[idx]))
        idx += 1
        for i in range(m):
            rows[i][k] *= phase
    return np.array(rows, dtype=np.complex128)


def convex_roof_ue_rank2(
    rho: DensityMatrix,
    params: UEParams,
    decomposition_size: int = 4,
    *,
    restarts: int = 20,
    rng: Optional[Union[int, np.random.Generator]] = None,
    step_tol: float = 1e-10,
    max_sweeps: int = 4000,
) -> float:
    """Numerically minimise the average pure-state unified entanglement.

    Searches over pure-state decompositions of a rank-<=-2 two-subsystem
    density matrix with up to ``decomposition_size`` elements, parametrised
    by Givens angles acting on the eigenvector weights.  Multi-start
    coordinate descent; pass ``rng`` (seed or generator) for reproducible
    restarts.  The average entanglement of each candidate decomposition is
    computed from reduced spectra directly, independent of the analytic
    concurrence map this oracle is typically used to check.
    """
    if len(rho.dims) != 2:
        raise ValueError(f"need a two-subsystem state, got dims {rho.dims}")
    d1, d2 = rho.dims
    evals, vecs = np.linalg.eigh(rho.entries)
    order = np.argsort(evals)[::-1]
    evals = np.clip(evals[order], 0.0, None)
    vecs = vecs[:, order]
    rank = int(np.sum(evals > _RANK_TOL))
    if rank > 2:
        raise ValueError(f"state rank {rank} exceeds 2 (third eigenvalue {evals[2]:.3e})")
    r = max(rank, 1)

    support_mats = vecs[:, :r].T.reshape(r, d1, d2)
    if r == 2:
        # every decomposition state must stay inside a 2x2 effective support
        col_rank = np.linalg.svd(np.hstack(support_mats), compute_uv=False)
        row_rank = np.linalg.svd(np.vstack(support_mats), compute_uv=False)
        if (col_rank[2:] > _RANK_TOL).any() or (row_rank[2:] > _RANK_TOL).any():
            raise ValueError("effective support is not 2x2")

    source = vecs[:, :r] * np.sqrt(evals[:r])[None, :]  # D x r

    if r == 1:
        lam = _schmidt_pair(source[:, 0], d1, d2)
        return float(_entropy_rows(lam[None, :], params)[0])

    m = int(decomposition_size)
    if m < r:
        raise ValueError(f"decomposition size {m} below state rank {r}")

    two_by_two = d1 == 2 and d2 == 2

    def objective(angles: np.ndarray) -> float:
        iso = _isometry_from_angles(angles, m, r)
        mats = (iso @ source.T).reshape(m, d1, d2)  # unnormalised members
        conj = mats.conj()
        weights = np.einsum("ikl,ikl->i", conj, mats).real
        if two_by_two:
            dets = mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]
            gap_sq = weights**2 - 4.0 * (dets.real**2 + dets.imag**2)
        else:
            gram = np.einsum("ikl,ikm->ilm", conj, mats)
            tr2 = np.einsum("ilm,ilm->i", gram.conj(), gram).real
            gap_sq = 2.0 * tr2 - weights**2
        gap = np.sqrt(np.clip(gap_sq, 0.0, None))
        live = weights > 1e-14
        w = np.where(live, weights, 1.0)
        lams = np.column_stack(((weights + gap) / (2.0 * w), (weights - gap) / (2.0 * w)))
        values = _entropy_rows(lams, params)
        return float(np.sum(np.where(live, weights * values, 0.0)))

    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    n_angles = m * (m - 1) + (r - 1)
    best = math.inf
    hit_cap = False
    for restart in range(restarts):
        angles = (
            np.zeros(n_angles)
            if restart == 0
            else gen.uniform(0.0, 2.0 * math.pi, size=n_angles)
        )
        value = objective(angles)
        step = 0.5
        sweeps = 0
        while step > step_tol:
            sweeps += 1
            if sweeps > max_sweeps:
                hit_cap = True
                break
            before = value
            for j in range(n_angles):
                base = angles[j]
                for delta in (step, -step):
                    angles[j] = base + delta
                    candidate = objective(angles)
                    if candidate < value - 1e-16:
                        value = candidate
                        base = angles[j]
                        # ride the improving direction to cut down on sweeps
                        for _ in range(24):
                            angles[j] = base + delta
                            candidate = objective(angles)
                            if candidate >= value - 1e-16:
                                angles[j] = base
                                break
                            value = candidate
                            base = angles[j]
                        break
                    angles[j] = base
            if before - value < 1e-12:  # sweep gained essentially nothing
                step *= 0.25
        best = min(best, value)
    if hit_cap:
        warnings.warn(
            "decomposition search hit the sweep cap before reaching step tolerance",
            RuntimeWarning,
            stacklevel=2,
        )
    return best


def _schmidt_pair(state: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Top-two Schmidt weights of an unnormalised bipartite vector."""
    mat = state.reshape(d1, d2)
    weight = float(np.sum(np.abs(mat) ** 2))
    gram = mat.conj().T @ mat
    tr2 = float(np.sum(np.abs(gram) ** 2))
    gap = math.sqrt(max(2.0 * tr2 - weight**2, 0.0))
    return np.array([(weight + gap) / (2.0 * weight), (weight - gap) / (2.0 * weight)])

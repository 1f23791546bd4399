"""Reduction to the central spin and coherence statistics.

The reduced central-spin state is obtained by a partial trace over all
ambient spins; coherence is quantified by the l1 norm (absolute sum of
off-diagonal elements) and by <sigma_x>.  Summary statistics derived from a
time series: the 1/e envelope crossing time and a count of coherence
revivals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .model import ModelConfig

if TYPE_CHECKING:
    from .dynamics import TimeGrid

#: samples that must stay below threshold before a crossing counts
_PERSISTENCE = 5
#: minimum peak prominence for a counted revival
_REVIVAL_PROMINENCE = 0.01


@dataclass(frozen=True)
class CoherenceSample:
    """Measures of the reduced central spin at one sampled time."""

    t: float
    sx: float
    l1: float
    trace_dev: float
    purity: float


@dataclass(frozen=True)
class SimulationResult:
    """Time series of central-spin measures for one run."""

    config: ModelConfig | None
    grid: "TimeGrid"
    samples: tuple[CoherenceSample, ...]

    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.samples])

    def sx_values(self) -> np.ndarray:
        return np.array([s.sx for s in self.samples])

    def l1_values(self) -> np.ndarray:
        return np.array([s.l1 for s in self.samples])


def partial_trace_to_central(rho: np.ndarray, m: int) -> np.ndarray:
    """Reduced 2x2 state of the central spin of a 2^(m+1)-dim density matrix.

    (rho_1)_ab = sum_k rho[a*2^m + k, b*2^m + k]; valid because the central
    spin is the most-significant bit.
    """
    half = 2 ** m
    if rho.shape != (2 * half, 2 * half):
        raise ValueError(f"expected a {2 * half}x{2 * half} matrix for m={m}, "
                         f"got {rho.shape}")
    blocks = rho.reshape(2, half, 2, half)
    return np.einsum("akbk->ab", blocks)


def l1_coherence(rho: np.ndarray) -> float:
    """Absolute sum of the off-diagonal elements."""
    a = np.abs(rho)
    return float(a.sum() - np.trace(a))


def expect_sigma_x(rho: np.ndarray) -> float:
    """<sigma_x> = Tr[rho sigma_x] = 2 Re rho_01 for a qubit state."""
    if rho.shape != (2, 2):
        raise ValueError("expect_sigma_x needs a 2x2 density matrix")
    return float(2.0 * rho[0, 1].real)


def sample_state(t: float, rho: np.ndarray, m: int) -> CoherenceSample:
    """Record the central-spin measures of a full-register state."""
    reduced = partial_trace_to_central(rho, m)
    return CoherenceSample(
        t=float(t),
        sx=expect_sigma_x(reduced),
        l1=l1_coherence(reduced),
        trace_dev=float(abs(np.trace(rho) - 1.0)),
        purity=float(np.trace(reduced @ reduced).real),
    )


def coherence_time(result: SimulationResult,
                   threshold_fraction: float = 1.0 / math.e) -> float | None:
    """First time the coherence envelope |rho_01| = l1/2 falls below
    threshold_fraction of its initial value and stays below for the next
    five samples.  Linearly interpolated; None when never reached.

    The l1-based envelope is used instead of <sigma_x> so the Larmor
    zero crossings do not register as coherence loss.
    """
    if not 0 < threshold_fraction < 1:
        raise ValueError("threshold_fraction must be in (0, 1)")
    if not result.samples:
        raise ValueError("empty result")
    env = result.l1_values() / 2.0
    ts = result.times()
    if env[0] == 0:
        raise ValueError("no initial coherence")
    thr = threshold_fraction * env[0]
    n = len(env)
    for k in range(n):
        if env[k] < thr and k + _PERSISTENCE < n \
                and np.all(env[k + 1:k + 1 + _PERSISTENCE] < thr):
            if k == 0:
                return 0.0
            e_prev, e_k = env[k - 1], env[k]
            return float(ts[k - 1] + (ts[k] - ts[k - 1]) * (e_prev - thr) / (e_prev - e_k))
    return None


def detect_revivals(result: SimulationResult) -> int:
    """Count coherence revivals: strict local maxima of l1(t) after the
    series first drops below half its initial value, with prominence (peak
    minus the lower of the two adjacent local minima) of at least 0.01."""
    if not result.samples:
        raise ValueError("empty result")
    l1 = result.l1_values()
    below = np.nonzero(l1 < 0.5 * l1[0])[0]
    if below.size == 0:
        return 0
    start = int(below[0])
    n = len(l1)
    count = 0
    for k in range(max(start, 1), n - 1):
        if l1[k] > l1[k - 1] and l1[k] > l1[k + 1]:
            a = k
            while a > 0 and l1[a - 1] <= l1[a]:
                a -= 1
            b = k
            while b < n - 1 and l1[b + 1] <= l1[b]:
                b += 1
            if l1[k] - min(l1[a], l1[b]) >= _REVIVAL_PROMINENCE:
                count += 1
    return count

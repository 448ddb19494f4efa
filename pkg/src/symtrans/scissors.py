"""Quantum-scissors realization of the coherent-to-qubit transform.

Optical state truncation keeps the vacuum and one-photon components of
``|alpha e^{i theta}>``; an umbrella POVM with failure element
``gamma |0><0|`` then rebalances the two amplitudes. Splitting the beam into
``M`` weaker beams first and succeeding on any one of them approaches the
optimal probability as ``M`` grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .coherent2qubit import analytic_spectrum, optimal_probability
from .errors import AmplitudeOutOfRange, SplitTooCoarse

ALPHA_SLACK = 1e-12


@dataclass(frozen=True)
class ScissorsEvaluation:
    alpha: float
    p_ost: float
    p_umbrella: float
    p_overall: float
    gamma: float


def ost_output(alpha: float, theta: float) -> np.ndarray:
    """Truncated state ``(|0> + alpha e^{i theta}|1>)/sqrt(1 + alpha^2)``."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return np.array([1.0, alpha * np.exp(1j * theta)]) / math.sqrt(1 + alpha * alpha)


def evaluate(alpha: float) -> ScissorsEvaluation:
    if not alpha > 0 or alpha > 1 + ALPHA_SLACK:
        raise AmplitudeOutOfRange(f"umbrella re-weighting needs 0 < alpha <= 1, got {alpha}")
    a2 = min(alpha, 1.0) ** 2
    p_ost = math.exp(-a2) * (1 + a2)
    p_umb = 2 * a2 / (1 + a2)
    return ScissorsEvaluation(
        alpha=alpha,
        p_ost=p_ost,
        p_umbrella=p_umb,
        p_overall=2 * a2 * math.exp(-a2),
        gamma=1 - a2,
    )


def overall_with_splits(alpha: float, m: int) -> float:
    """``1 - (1 - 2 (alpha^2/M) exp(-alpha^2/M))^M``."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if int(m) != m or m < 1:
        raise ValueError(f"M must be a positive integer, got {m}")
    if alpha / math.sqrt(m) > 1 + ALPHA_SLACK:
        raise SplitTooCoarse(f"alpha/sqrt(M) = {alpha / math.sqrt(m):.6g} > 1")
    y = 2 * (alpha * alpha / m) * math.exp(-alpha * alpha / m)
    return float(-math.expm1(m * math.log1p(-y)))


@dataclass
class FigureTable:
    """Curve family sampled on a shared amplitude grid."""

    alpha: np.ndarray
    curves: dict[str, np.ndarray] = field(default_factory=dict)

    def rows(self):
        """Long format ``(alpha, curve_name, value)``, grid-point major."""
        for i, a in enumerate(self.alpha):
            for name, values in self.curves.items():
                yield float(a), name, float(values[i])


def default_grid(stop: float, step: float = 0.01) -> np.ndarray:
    count = int(round(stop / step))
    return step * np.arange(1, count + 1)


def figure1_data(alpha_grid=None, ns=(4, 8)) -> FigureTable:
    """Optimal transform vs unambiguous discrimination of N coherent states."""
    grid = default_grid(1.5) if alpha_grid is None else np.asarray(alpha_grid, dtype=float)
    if np.any(grid <= 0):
        raise ValueError("amplitudes must be positive")
    table = FigureTable(grid)
    table.curves["optimal"] = np.array([optimal_probability(a) for a in grid])
    for n in ns:
        table.curves[f"uds_N{n}"] = np.array([analytic_spectrum(a, n).min() for a in grid])
    return table


def figure6_data(alpha_grid=None, ms=tuple(range(1, 11))) -> FigureTable:
    """Optimal transform vs beam-split scissors strategies for several M."""
    grid = default_grid(1.0) if alpha_grid is None else np.asarray(alpha_grid, dtype=float)
    if np.any(grid <= 0):
        raise ValueError("amplitudes must be positive")
    table = FigureTable(grid)
    table.curves["optimal"] = np.array([optimal_probability(a) for a in grid])
    for m in ms:
        table.curves[f"split_M{m}"] = np.array([overall_with_splits(a, m) for a in grid])
    return table

"""Brute-force cross-checks that share no code path with the main solvers.

``fock_gram`` builds coherent-state overlaps from truncated Fock vectors
instead of the closed form; ``grid_search_optimal`` enumerates leak spectra
on a simplex lattice instead of running the simplex method.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import CutoffTooSmall, DimensionMismatch, TooLarge
from .linalg import as_spectrum

TAIL_TOL = 1e-13
MAX_LATTICE_POINTS = 10_000_000
DEFAULT_STEPS = {3: 0.01, 4: 0.05, 5: 0.1}


def _tail_majorant(alpha: float, cutoff: int) -> float:
    """Upper bound on the Poisson mass beyond ``cutoff`` (geometric majorant)."""
    a2 = alpha * alpha
    ratio = a2 / (cutoff + 2)
    if ratio >= 1:
        return math.inf
    log_first = -a2 + (cutoff + 1) * math.log(a2) - math.lgamma(cutoff + 2)
    return math.exp(log_first) / (1 - ratio)


def default_cutoff(alpha: float) -> int:
    c = 0
    while _tail_majorant(alpha, c) >= TAIL_TOL:
        c += 1
    return c


def fock_gram(alpha: float, n: int, cutoff: int | None = None) -> np.ndarray:
    """Gram matrix of N phase-symmetric coherent states from truncated Fock vectors.

    Each truncated vector is renormalized, so the diagonal is exactly one.

    Raises:
        CutoffTooSmall: if the discarded Poisson tail may exceed ``1e-13``.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if cutoff is None:
        cutoff = default_cutoff(alpha)
    elif _tail_majorant(alpha, cutoff) >= TAIL_TOL:
        raise CutoffTooSmall(
            f"cutoff {cutoff} leaves a tail bound of {_tail_majorant(alpha, cutoff):.2e}"
        )
    r = np.arange(cutoff + 1)
    lgam = np.array([math.lgamma(k + 1) for k in r])
    mag = np.exp(-alpha * alpha / 2 + r * math.log(alpha) - lgam / 2)
    theta = 2 * np.pi * np.arange(n) / n
    kets = mag[None, :] * np.exp(1j * np.outer(theta, r))
    kets /= np.linalg.norm(kets, axis=1, keepdims=True)
    return kets.conj() @ kets.T


@dataclass(frozen=True)
class GridSearchResult:
    best_p: float
    best_x: np.ndarray
    grid_step: float


def _compositions(total: int, parts: int) -> np.ndarray:
    """All non-negative integer vectors of length ``parts`` summing to ``total``."""
    bars = np.array(list(itertools.combinations(range(total + parts - 1), parts - 1)))
    if bars.size == 0:
        return np.full((1, parts), total)
    edges = np.hstack([np.full((len(bars), 1), -1), bars, np.full((len(bars), 1), total + parts - 1)])
    return np.diff(edges, axis=1) - 1


def _convolution_matrix(y: np.ndarray) -> np.ndarray:
    # written out independently of linalg.dcm
    n = y.size
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = y[(n - j + i) % n] / n
    return out


def grid_search_optimal(lambda_A, lambda_B, step: float | None = None) -> GridSearchResult:
    """Best success probability over leak spectra on a lattice of spacing ``step``."""
    lam_a = as_spectrum(lambda_A)
    lam_b = as_spectrum(lambda_B)
    n = lam_a.size
    if lam_b.size != n:
        raise DimensionMismatch(f"spectra have lengths {n} and {lam_b.size}")
    if n > 5:
        raise TooLarge(f"N={n} > 5 makes the lattice intractable")
    if step is None:
        step = DEFAULT_STEPS.get(n, 0.5)
    units = n / step
    total = int(round(units))
    if abs(units - total) > 1e-9:
        raise ValueError(f"step {step} does not divide N={n}")
    if math.comb(total + n - 1, n - 1) > MAX_LATTICE_POINTS:
        raise TooLarge("lattice has more than 1e7 points")

    leaks = _compositions(total, n) * step
    conv = leaks @ _convolution_matrix(lam_b).T
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(conv > 0, lam_a[None, :] / conv, np.inf)
    p = np.minimum(ratios.min(axis=1), 1.0)
    k = int(np.argmax(p))
    return GridSearchResult(best_p=float(p[k]), best_x=p[k] * leaks[k], grid_step=step)

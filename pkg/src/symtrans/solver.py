"""Optimal uniform transforms between symmetric sets of pure states.

For circulant source/target Gram matrices the success criterion

    G_A = p * (Pi_s o G_B) + (1 - p) * Pi_f

diagonalizes in the Fourier basis, and the best ``p`` is the value of the
linear program

    maximize sum(x)  s.t.  dcm(lam_B) @ x <= lam_A,  x >= 0

with ``p = sum(x)/N`` and leak spectrum ``x/p``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ._simplex import simplex_max
from .errors import DimensionMismatch, Empty, NotGram
from .linalg import (
    PSD_TOL,
    CirculantGram,
    as_spectrum,
    dcm,
    identity_spectrum,
    is_gram_of_states,
)

DIAG_TOL = 1e-7
# below this p (or 1 - p) the leak (or redundancy) spectrum is set by convention
_EDGE = 1e-12


@dataclass(frozen=True)
class TransformSolution:
    """Optimal uniform transform in spectral form.

    Attributes:
        p_success: optimal success probability.
        leak_spectrum: eigenvalues of the leak Gram matrix (success residuals).
        redundancy_spectrum: eigenvalues of the redundancy Gram matrix.
        source_spectrum, target_spectrum: the LP inputs.
        leakless, redundancy_free, leak_lin_dependent, redundancy_lin_dependent:
            flags filled in by :func:`diagnose`.
    """

    p_success: float
    leak_spectrum: np.ndarray
    redundancy_spectrum: np.ndarray
    source_spectrum: np.ndarray
    target_spectrum: np.ndarray
    leakless: bool = False
    redundancy_free: bool = False
    leak_lin_dependent: bool = False
    redundancy_lin_dependent: bool = False

    @property
    def n(self) -> int:
        return self.source_spectrum.size

    def residual(self) -> float:
        """Max-norm of ``lam_A - p*(lam_leak * lam_B) - (1-p)*lam_red``."""
        p = self.p_success
        lhs = (
            p * dcm(self.target_spectrum) @ self.leak_spectrum
            + (1 - p) * self.redundancy_spectrum
        )
        return float(np.max(np.abs(self.source_spectrum - lhs)))

    def flags(self) -> dict:
        return {
            "leakless": self.leakless,
            "redundancy_free": self.redundancy_free,
            "leak_lin_dependent": self.leak_lin_dependent,
            "redundancy_lin_dependent": self.redundancy_lin_dependent,
        }


@dataclass(frozen=True)
class GeneralWitness:
    """Per-state success probabilities plus leak and redundancy Gram matrices."""

    success_probs: np.ndarray
    leak_gram: np.ndarray
    redundancy_gram: np.ndarray


def _pair(lambda_A, lambda_B, tol):
    lam_a = as_spectrum(lambda_A, tol)
    lam_b = as_spectrum(lambda_B, tol)
    if lam_a.size != lam_b.size:
        raise DimensionMismatch(f"spectra have lengths {lam_a.size} and {lam_b.size}")
    return lam_a, lam_b


def _solve_lp(lam_a, lam_b):
    # Ties between optimal vertices go to the one with the most redundancy
    # weight on the all-equal component, i.e. the smallest (dcm @ x)[0].
    A = dcm(lam_b)
    res = simplex_max(np.ones(lam_a.size), A, lam_a, secondary=-A[0])
    return res.x


def optimize_uniform(lambda_A, lambda_B, tol: float = PSD_TOL) -> TransformSolution:
    """Optimal uniform transform from source spectrum ``lambda_A`` to target ``lambda_B``.

    Edge conventions: at ``p = 0`` the leak spectrum is ``N*e_0``; at ``p = 1``
    the redundancy spectrum is ``N*e_0``. A target spectrum of ``N*e_0``
    (identical target states) yields ``p = 1``. Among several optimal
    vertices the one closest to redundancy-free is returned.
    """
    lam_a, lam_b = _pair(lambda_A, lambda_B, tol)
    n = lam_a.size
    x = _solve_lp(lam_a, lam_b)
    p = float(np.clip(x.sum() / n, 0.0, 1.0))

    if p > _EDGE:
        leak = x / p
        leak *= n / leak.sum()
    else:
        p = 0.0
        leak = identity_spectrum(n)
    if 1.0 - p > _EDGE:
        red = (lam_a - dcm(lam_b) @ x) / (1.0 - p)
        red = np.maximum(red, 0.0)
        red *= n / red.sum()
    else:
        p = 1.0
        red = identity_spectrum(n)

    sol = TransformSolution(p, leak, red, lam_a, lam_b)
    return diagnose(sol)


def feasible_at(lambda_A, lambda_B, p: float, tol: float = PSD_TOL):
    """Whether a uniform transform succeeding with probability ``p`` exists.

    Returns ``(True, x)`` with ``x >= 0``, ``sum(x) = p*N`` and
    ``dcm(lam_B) @ x <= lam_A``, or ``(False, None)``. The feasible set is
    closed under shrinking ``x`` (the convolution matrix is entrywise
    non-negative), so a witness is the LP optimum scaled down to ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    lam_a, lam_b = _pair(lambda_A, lambda_B, tol)
    n = lam_a.size
    if p == 0.0:
        return True, np.zeros(n)
    x = _solve_lp(lam_a, lam_b)
    p_opt = x.sum() / n
    if p > p_opt + tol:
        return False, None
    if p >= p_opt:
        return True, x
    return True, x * (p / p_opt)


def uds_probability(lambda_A) -> float:
    """Optimal unambiguous discrimination probability: the smallest eigenvalue."""
    return float(as_spectrum(lambda_A).min())


def verify_general(G_A, G_B, w: GeneralWitness, tol: float = PSD_TOL) -> bool:
    """Check ``G_A = P_s o Pi_s o G_B + P_f o Pi_f`` for a non-uniform witness."""
    G_A = np.asarray(G_A, dtype=complex)
    G_B = np.asarray(G_B, dtype=complex)
    Pi_s = np.asarray(w.leak_gram, dtype=complex)
    Pi_f = np.asarray(w.redundancy_gram, dtype=complex)
    probs = np.asarray(w.success_probs, dtype=float)
    n = probs.size
    for name, mat in (("G_A", G_A), ("G_B", G_B), ("leak", Pi_s), ("redundancy", Pi_f)):
        if mat.shape != (n, n):
            raise DimensionMismatch(f"{name} has shape {mat.shape}, expected {(n, n)}")
    if np.any(probs < -tol) or np.any(probs > 1 + tol):
        return False
    probs = np.clip(probs, 0.0, 1.0)
    P_s = np.sqrt(np.outer(probs, probs))
    P_f = np.sqrt(np.outer(1 - probs, 1 - probs))
    if not (is_gram_of_states(Pi_s, tol) and is_gram_of_states(Pi_f, tol)):
        return False
    rhs = P_s * Pi_s * G_B + P_f * Pi_f
    return bool(np.max(np.abs(G_A - rhs)) <= tol)


def uniform_witness(sol: TransformSolution) -> GeneralWitness:
    """Dense witness (``p_i = p`` for all ``i``) rebuilt from a spectral solution."""
    n = sol.n
    return GeneralWitness(
        success_probs=np.full(n, sol.p_success),
        leak_gram=CirculantGram.from_spectrum(sol.leak_spectrum).matrix(),
        redundancy_gram=CirculantGram.from_spectrum(sol.redundancy_spectrum).matrix(),
    )


def uniformize(probs) -> float:
    probs = np.asarray(probs, dtype=float)
    if probs.size == 0:
        raise Empty("no success probabilities given")
    if np.any(probs < 0) or np.any(probs > 1):
        raise ValueError("success probabilities must lie in [0, 1]")
    return float(probs.mean())


def symmetrize_gram(Pi, tol: float = PSD_TOL) -> CirculantGram:
    """Average ``Pi`` over all cyclic shift conjugations.

    ``first_row[d] = mean_i Pi[i, (i + d) mod N]``; the result is a
    circulant Gram matrix with the same diagonal.
    """
    Pi = np.asarray(Pi, dtype=complex)
    if not is_gram_of_states(Pi, tol):
        raise NotGram("input is not a Gram matrix of unit vectors")
    n = Pi.shape[0]
    i = np.arange(n)
    row = np.array([Pi[i, (i + d) % n].mean() for d in range(n)])
    row[0] = 1.0
    return CirculantGram(row, tol)


def diagnose(sol: TransformSolution, tol: float = DIAG_TOL) -> TransformSolution:
    n = sol.n
    ones = identity_spectrum(n)
    return replace(
        sol,
        leakless=bool(np.max(np.abs(sol.leak_spectrum - ones)) <= tol),
        redundancy_free=bool(np.max(np.abs(sol.redundancy_spectrum - ones)) <= tol),
        leak_lin_dependent=bool(sol.leak_spectrum.min() < tol),
        redundancy_lin_dependent=bool(sol.redundancy_spectrum.min() < tol),
    )


def uniform_residual(G_A, G_B, p: float, leak, redundancy) -> float:
    """Max entrywise deviation from ``G_A = p Pi_s o G_B + (1-p) Pi_f``.

    Accepts dense matrices or :class:`CirculantGram` instances.
    """
    mats = [m.matrix() if isinstance(m, CirculantGram) else np.asarray(m, dtype=complex)
            for m in (G_A, G_B, leak, redundancy)]
    G_A, G_B, Pi_s, Pi_f = mats
    if not (G_A.shape == G_B.shape == Pi_s.shape == Pi_f.shape):
        raise DimensionMismatch("all four matrices must share one shape")
    return float(np.max(np.abs(G_A - p * Pi_s * G_B - (1 - p) * Pi_f)))

"""Symmetric state ensembles and their Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotSquare
from .linalg import PSD_TOL, CirculantGram


def _root_phases(n: int) -> np.ndarray:
    """``exp(2 pi i k/n)`` with exact conjugate symmetry between k and n-k."""
    k = np.arange(n)
    z = np.exp(2j * np.pi * k / n)
    upper = k > n // 2
    z[upper] = np.conj(z[(n - k[upper]) % n])
    z[0] = 1.0
    if n % 2 == 0:
        z[n // 2] = -1.0
    return z


@dataclass(frozen=True)
class CoherentEnsemble:
    """Coherent states ``|alpha exp(i theta_k)>`` with ``theta_k = 2 pi k/N``."""

    alpha: float
    n_states: int

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if int(self.n_states) != self.n_states or self.n_states < 2:
            raise ValueError(f"n_states must be an integer >= 2, got {self.n_states}")

    @property
    def phases(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_states) / self.n_states


@dataclass(frozen=True)
class QubitEnsemble:
    """XY-plane qubits ``(|0> + exp(i theta_k)|1>)/sqrt(2)``."""

    n_states: int

    def __post_init__(self):
        if int(self.n_states) != self.n_states or self.n_states < 2:
            raise ValueError(f"n_states must be an integer >= 2, got {self.n_states}")

    @property
    def phases(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_states) / self.n_states

    def kets(self) -> np.ndarray:
        z = _root_phases(self.n_states)
        return np.stack([np.ones_like(z), z], axis=1) / np.sqrt(2)


def coherent_gram_row(e: CoherentEnsemble) -> CirculantGram:
    """First row ``<alpha|alpha e^{i theta_k}> = exp(alpha^2 (e^{i theta_k} - 1))``."""
    z = _root_phases(e.n_states)
    row = np.exp(e.alpha**2 * (z - 1.0))
    row[0] = 1.0
    return CirculantGram(row)


def qubit_gram_row(e: QubitEnsemble) -> CirculantGram:
    return CirculantGram((1.0 + _root_phases(e.n_states)) / 2)


def tensor_power_gram(G: CirculantGram, j: int) -> CirculantGram:
    """Gram matrix of the j-fold tensor copies; ``j = 0`` gives all ones."""
    if j < 0:
        raise ValueError(f"power must be non-negative, got {j}")
    if j == 0:
        return CirculantGram.ones(G.n)
    return CirculantGram(G.first_row**j, G.tol)


def gram_of(kets) -> np.ndarray:
    """``G[p, q] = <k_p|k_q>`` for kets given as rows (or a list of vectors)."""
    if not isinstance(kets, np.ndarray):
        lengths = {len(k) for k in kets}
        if len(lengths) > 1:
            raise DimensionMismatch(f"kets have differing dimensions {sorted(lengths)}")
    K = np.asarray(kets, dtype=complex)
    if K.ndim != 2 or K.shape[0] == 0:
        raise DimensionMismatch(f"expected an (N, d) array of kets, got shape {K.shape}")
    return K.conj() @ K.T


def is_symmetric_set(G, tol: float = PSD_TOL) -> bool:
    """True iff ``G[i, j]`` depends only on ``(j - i) mod N`` (circulant)."""
    G = np.asarray(G, dtype=complex)
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {G.shape}")
    n = G.shape[0]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return bool(np.max(np.abs(G - G[0][idx]), initial=0.0) <= tol)

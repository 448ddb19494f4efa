"""Coherent states to XY-plane qubits: the constructive optimal transform.

For an even number ``N`` of phase-symmetric coherent states of amplitude
``0 < alpha <= 1`` the source Gram matrix decomposes as

    G_A = p_0 * ones + sum_{j>=1} p_j * G_B^{o j}

with a probability vector ``p`` whose failure entry is ``exp(-2 alpha^2)``.
Spectrally this is the triangular system ``lam_A = M p`` where the columns of
``M`` are the binomial spectra of the qubit tensor powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import (
    AmplitudeOutOfRange,
    DegenerateFailure,
    DimensionTooLarge,
    OddN,
)
from .linalg import CirculantGram
from .states import QubitEnsemble, qubit_gram_row, tensor_power_gram

SERIES_RTOL = 1e-17
ALPHA_SLACK = 1e-12
MAX_LEAK_STATES_N = 8


def _check_even(n: int) -> None:
    if n < 2 or n % 2:
        raise OddN(f"N must be an even integer >= 2, got {n}")


def _clip_alpha(alpha: float) -> float:
    if not alpha > 0:
        raise AmplitudeOutOfRange(f"alpha must be positive, got {alpha}")
    if alpha > 1.0 + ALPHA_SLACK:
        raise AmplitudeOutOfRange(f"alpha={alpha} exceeds 1; split the beam first")
    return min(alpha, 1.0)


def analytic_spectrum(alpha: float, n: int) -> np.ndarray:
    """Eigenvalues of the coherent-state Gram matrix from the Poisson series.

    ``lam_j = exp(-alpha^2) N sum_r alpha^(2(N r + j)) / (N r + j)!``, i.e. every
    N-th term of the Taylor series of ``exp(alpha^2)`` starting at term ``j``.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    a2 = alpha * alpha
    log_a2 = math.log(a2)
    out = np.empty(n)
    for j in range(n):
        m = j
        total = 0.0
        while True:
            term = math.exp(m * log_a2 - math.lgamma(m + 1))
            total += term
            m += n
            nxt = math.exp(m * log_a2 - math.lgamma(m + 1))
            # terms decrease once m exceeds alpha^2
            if m > a2 and nxt < SERIES_RTOL * total:
                break
        out[j] = total
    return math.exp(-a2) * n * out


@dataclass(frozen=True)
class MixingMatrix:
    """``M = M' D`` with binomial columns ``M'`` and weights ``D = diag(N/2^k)``."""

    m: np.ndarray
    m_binom: np.ndarray
    d: np.ndarray
    s: np.ndarray

    def inverse(self) -> np.ndarray:
        """``D^-1 S M' S``; exact since ``S M' S`` inverts the binomial matrix."""
        return (self.s / self.d)[:, None] * self.m_binom * self.s[None, :]


def mixing_matrix(n: int) -> MixingMatrix:
    _check_even(n)
    binom = np.array(
        [[math.comb(k, i) for k in range(n)] for i in range(n)], dtype=float
    )
    d = np.array([n / 2**k for k in range(n)])
    s = np.array([(-1.0) ** i for i in range(n)])
    return MixingMatrix(m=binom * d[None, :], m_binom=binom, d=d, s=s)


@dataclass(frozen=True)
class ProbabilityVector:
    """Multiprobabilistic vector; entry 0 is the failure probability."""

    probs: np.ndarray
    alpha: float

    @property
    def p0(self) -> float:
        return float(self.probs[0])

    @property
    def n(self) -> int:
        return self.probs.size


def probability_vector(alpha: float, n: int) -> ProbabilityVector:
    _check_even(n)
    alpha = _clip_alpha(alpha)
    lam = analytic_spectrum(alpha, n)
    return ProbabilityVector(mixing_matrix(n).inverse() @ lam, alpha)


def positivity_margins(alpha: float, n: int) -> np.ndarray:
    """``lam_j - (j+1)/(j-k+1) lam_{j+1}`` over ``0 <= k <= j < N-1``.

    Every entry is non-negative for ``alpha <= 1``; this is what makes the
    probability vector non-negative.
    """
    lam = analytic_spectrum(alpha, n)
    return np.array(
        [
            lam[j] - (j + 1) / (j - k + 1) * lam[j + 1]
            for k in range(n - 1)
            for j in range(k, n - 1)
        ]
    )


def _leak_weights(pv: ProbabilityVector) -> np.ndarray:
    if pv.p0 >= 1.0 - 1e-12:
        raise DegenerateFailure(f"failure probability {pv.p0} leaves no success branch")
    w = np.clip(pv.probs[1:], 0.0, None)
    return w / w.sum()


def leak_gram(pv: ProbabilityVector, n: int) -> CirculantGram:
    """``Pi_s = sum_j p_{j+1}/(1-p_0) G_B^{o j}`` for ``j = 0..N-2``."""
    w = _leak_weights(pv)
    G_B = qubit_gram_row(QubitEnsemble(n))
    row = sum(w[j] * tensor_power_gram(G_B, j).first_row for j in range(n - 1))
    return CirculantGram(row)


def leak_states(pv: ProbabilityVector, n: int) -> np.ndarray:
    """Explicit leak kets, one per row.

    Ket ``i`` is ``sum_j sqrt(w_j) |b_i>^{(x) j} (x) |0>^{(x) N-2-j} (x) |j>`` with an
    ``(N-1)``-level indicator register last, so the dimension is
    ``2^(N-2) (N-1)``.
    """
    _check_even(n)
    if n > MAX_LEAK_STATES_N:
        raise DimensionTooLarge(f"N={n} > {MAX_LEAK_STATES_N}: dimension grows as 2^(N-2)(N-1)")
    w = _leak_weights(pv)
    b = QubitEnsemble(n).kets()
    zero = np.array([1.0, 0.0], dtype=complex)
    flag = np.eye(n - 1, dtype=complex)
    kets = []
    for i in range(n):
        ket = 0
        for j in range(n - 1):
            factors = [b[i]] * j + [zero] * (n - 2 - j) + [flag[j]]
            ket = ket + math.sqrt(w[j]) * reduce(np.kron, factors)
        kets.append(ket)
    return np.array(kets)


def beamsplit_plan(alpha: float) -> tuple[float, int]:
    """Split amplitude ``alpha`` into ``M`` equal beams of amplitude ``beta <= 1``."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    k = math.floor(alpha) + 1
    return alpha / k, k * k


def optimal_probability(alpha: float) -> float:
    """``1 - exp(-2 alpha^2)``, valid for every amplitude and every even N."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return float(-math.expm1(-2 * alpha * alpha))


def split_composition_probability(alpha: float, n: int = 2) -> float:
    """Success probability of the split-then-transform construction.

    Each of the ``M`` beams of amplitude ``beta`` fails with the constructive
    failure probability ``p_0(beta)``; the composite fails only if all do.
    """
    beta, m = beamsplit_plan(alpha)
    p0 = probability_vector(beta, n).p0
    return 1.0 - p0**m


def odd_n_probability(alpha: float, n_odd: int) -> tuple[float, bool]:
    """Achievable probability for odd N via the interlaced 2N-state transform.

    The second element flags that optimality is conjectural for odd N.
    """
    if n_odd < 3 or n_odd % 2 == 0:
        raise ValueError(f"expected an odd N >= 3, got {n_odd}")
    return optimal_probability(alpha), True

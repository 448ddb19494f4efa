"""Circulant algebra on first rows and eigenvalue vectors.

Conventions used everywhere in the package:

* A circulant matrix is stored by its first row ``c``; entry ``(i, j)`` of the
  full matrix is ``c[(j - i) % N]``.
* The forward DFT is unnormalized with kernel ``exp(-2j*pi*j*k/N)``, so the
  eigenvalues of a circulant Gram matrix sum to ``N``.
* ``circular_convolution`` carries a ``1/N`` factor, which makes the
  spectrum of a Hadamard product of circulants equal to the convolution of
  their spectra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidSpectrum,
    NotHermitian,
    NotPSD,
    NotSquare,
)

PSD_TOL = 1e-9
MAX_CIRCULANT_N = 4096


def _as_vector(v, dtype=complex) -> np.ndarray:
    arr = np.asarray(v, dtype=dtype)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"expected a non-empty 1-D vector, got shape {arr.shape}")
    return arr


def dft_matrix(n: int) -> np.ndarray:
    """Unnormalized DFT matrix ``F[j, k] = exp(-2*pi*i*j*k/n)``."""
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-2j * np.pi * jk / n)


def dft_forward(v) -> np.ndarray:
    v = _as_vector(v)
    return dft_matrix(v.size) @ v


def dft_inverse(v) -> np.ndarray:
    """Inverse of :func:`dft_forward` (conjugated kernel, ``1/N``)."""
    v = _as_vector(v)
    return dft_matrix(v.size).conj() @ v / v.size


def as_spectrum(values, tol: float = PSD_TOL) -> np.ndarray:
    """Validate an eigenvalue vector of a circulant Gram matrix.

    Entries must be real, ``>= -tol`` and sum to ``N`` (relative ``tol``).
    Entries in ``[-tol, 0)`` are clamped to zero. Returns a float array.
    """
    arr = np.asarray(values)
    if np.iscomplexobj(arr):
        if np.max(np.abs(arr.imag), initial=0.0) > tol:
            raise InvalidSpectrum("spectrum has non-negligible imaginary parts")
        arr = arr.real
    arr = np.array(arr, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidSpectrum(f"spectrum must be a non-empty vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidSpectrum("spectrum has non-finite entries")
    n = arr.size
    if arr.min() < -tol:
        raise InvalidSpectrum(f"spectrum entry {arr.min():.3e} is negative")
    if abs(arr.sum() - n) > tol * n:
        raise InvalidSpectrum(f"spectrum sums to {arr.sum():.12g}, expected {n}")
    arr[arr < 0] = 0.0
    return arr


def identity_spectrum(n: int) -> np.ndarray:
    """Spectrum ``N*e_0`` of the all-ones Gram matrix (identical states)."""
    out = np.zeros(n)
    out[0] = n
    return out


@dataclass(frozen=True)
class CirculantGram:
    """Hermitian circulant Gram matrix, stored by its first row.

    Construction checks the unit diagonal, conjugate symmetry and positive
    semidefiniteness (via the DFT spectrum) up to ``tol``.
    """

    first_row: np.ndarray
    tol: float = PSD_TOL

    def __post_init__(self):
        row = _as_vector(self.first_row).copy()
        n = row.size
        if n > MAX_CIRCULANT_N:
            raise ValueError(f"N={n} exceeds the supported maximum {MAX_CIRCULANT_N}")
        if abs(row[0] - 1.0) > self.tol:
            raise NotHermitian(f"first entry must be 1, got {row[0]}")
        mirrored = np.conj(row[(-np.arange(n)) % n])
        if np.max(np.abs(row - mirrored)) > self.tol:
            raise NotHermitian("first row is not conjugate symmetric")
        row.flags.writeable = False
        object.__setattr__(self, "first_row", row)
        # raises NotPSD
        eigenvalues_of_circulant(self)

    @property
    def n(self) -> int:
        return self.first_row.size

    def matrix(self) -> np.ndarray:
        return circulant_matrix(self.first_row)

    def spectrum(self) -> np.ndarray:
        return eigenvalues_of_circulant(self)

    @classmethod
    def from_spectrum(cls, spectrum, tol: float = PSD_TOL) -> "CirculantGram":
        lam = as_spectrum(spectrum, tol)
        return cls(dft_inverse(lam), tol)

    @classmethod
    def ones(cls, n: int) -> "CirculantGram":
        return cls(np.ones(n, dtype=complex))

    @classmethod
    def identity(cls, n: int) -> "CirculantGram":
        row = np.zeros(n, dtype=complex)
        row[0] = 1.0
        return cls(row)


def circulant_matrix(first_row) -> np.ndarray:
    row = _as_vector(first_row)
    n = row.size
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return row[idx]


def eigenvalues_of_circulant(C: CirculantGram, tol: float | None = None) -> np.ndarray:
    """Real, clamped eigenvalue vector of a Hermitian circulant Gram matrix.

    Raises:
        NotHermitian: if the DFT of the first row has an imaginary part above ``tol``.
        NotPSD: if an eigenvalue is below ``-tol``.
    """
    tol = C.tol if tol is None else tol
    lam = dft_forward(C.first_row)
    if np.max(np.abs(lam.imag)) > tol:
        raise NotHermitian(f"DFT of first row has imaginary part {np.max(np.abs(lam.imag)):.3e}")
    vals = lam.real.copy()
    if vals.min() < -tol:
        raise NotPSD(f"eigenvalue {vals.min():.3e} below -{tol:g}")
    vals[vals < 0] = 0.0
    return vals


def hadamard(A: CirculantGram, B: CirculantGram) -> CirculantGram:
    if A.n != B.n:
        raise DimensionMismatch(f"sizes differ: {A.n} vs {B.n}")
    return CirculantGram(A.first_row * B.first_row, max(A.tol, B.tol))


def circular_convolution(x, y) -> np.ndarray:
    """Normalized circular convolution ``z_i = (1/N) sum_j x_j y_{(i-j) mod N}``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise DimensionMismatch(f"shapes differ: {x.shape} vs {y.shape}")
    return dcm(x) @ y


def dcm(x) -> np.ndarray:
    """Discrete convolution matrix, with the ``1/N`` folded in.

    ``dcm(x) @ y == circular_convolution(x, y)``; column ``j`` is ``x/N``
    shifted down by ``j`` positions.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return x[idx] / n


def is_gram_of_states(M, tol: float = PSD_TOL) -> bool:
    """True iff ``M`` is Hermitian PSD with unit diagonal, up to ``tol``."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {M.shape}")
    if np.max(np.abs(M - M.conj().T), initial=0.0) > tol:
        return False
    if np.max(np.abs(np.diag(M) - 1.0), initial=0.0) > tol:
        return False
    return bool(np.linalg.eigvalsh((M + M.conj().T) / 2).min() >= -tol)


def synthesize_states_from_spectrum(spectrum, tol: float = PSD_TOL) -> np.ndarray:
    """Build ``N`` kets whose Gram matrix is circulant with the given spectrum.

    Row ``k`` of the result is ``(1/sqrt(N)) sum_j sqrt(lam_j) exp(2 pi i k j/N) |j>``.
    Zero eigenvalues give zero coefficients.
    """
    lam = as_spectrum(spectrum, tol)
    n = lam.size
    coeff = np.sqrt(lam)
    phases = dft_matrix(n).conj()
    return phases * coeff[None, :] / np.sqrt(n)

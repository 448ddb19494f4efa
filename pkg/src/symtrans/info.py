"""Holevo-type bounds on the information carried by leak and redundancy states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_spectrum

ZERO_EIG = 1e-12


@dataclass(frozen=True)
class EntropyReport:
    leak_bits: float
    redundancy_bits: float


def entropy_bound(spectrum) -> float:
    """Shannon entropy (bits) of the normalized Gram spectrum ``lam/N``.

    For equiprobable pure states this equals the von Neumann entropy of the
    average state, hence bounds the accessible information. Eigenvalues
    below ``1e-12`` count as zero.
    """
    lam = as_spectrum(spectrum)
    q = lam / lam.size
    q = q[lam > ZERO_EIG]
    h = -np.sum(q * np.log2(q))
    return float(min(max(h, 0.0), np.log2(lam.size)))


def report(sol) -> EntropyReport:
    return EntropyReport(
        leak_bits=entropy_bound(sol.leak_spectrum),
        redundancy_bits=entropy_bound(sol.redundancy_spectrum),
    )

from math import comb

import numpy as np
import pytest

from symtrans.errors import DimensionMismatch, NotSquare
from symtrans.linalg import CirculantGram, circular_convolution, identity_spectrum
from symtrans.oracle import fock_gram
from symtrans.states import (
    CoherentEnsemble,
    QubitEnsemble,
    coherent_gram_row,
    gram_of,
    is_symmetric_set,
    qubit_gram_row,
    tensor_power_gram,
)


def test_coherent_small_alpha_tends_to_ones():
    row = coherent_gram_row(CoherentEnsemble(1e-8, 5)).first_row
    np.testing.assert_allclose(row, np.ones(5), atol=1e-12)


@pytest.mark.parametrize("alpha", [0.2, 0.7, 1.3])
def test_two_states_antipodal_overlap(alpha):
    G = coherent_gram_row(CoherentEnsemble(alpha, 2))
    np.testing.assert_allclose(G.first_row, [1, np.exp(-2 * alpha**2)], atol=1e-15)
    assert G.spectrum().min() == pytest.approx(1 - np.exp(-2 * alpha**2), abs=1e-14)


def test_coherent_matches_fock_oracle():
    closed = coherent_gram_row(CoherentEnsemble(0.7, 4)).matrix()
    assert np.max(np.abs(closed - fock_gram(0.7, 4))) < 1e-10


@pytest.mark.parametrize("alpha,n", [(0.3, 4), (1.1, 6), (2.0, 8)])
def test_coherent_row_invariants(alpha, n):
    row = coherent_gram_row(CoherentEnsemble(alpha, n)).first_row
    assert row[0] == 1.0
    assert np.all(np.abs(row) <= 1.0 + 1e-15)
    assert row[n // 2] == pytest.approx(np.exp(-2 * alpha**2), abs=1e-15)


def test_ensemble_validation():
    with pytest.raises(ValueError):
        CoherentEnsemble(0.0, 4)
    with pytest.raises(ValueError):
        CoherentEnsemble(0.5, 1)
    with pytest.raises(ValueError):
        QubitEnsemble(1)


def test_qubit_rows():
    np.testing.assert_allclose(qubit_gram_row(QubitEnsemble(2)).first_row, [1, 0], atol=1e-15)
    np.testing.assert_allclose(
        qubit_gram_row(QubitEnsemble(4)).first_row, [1, (1 + 1j) / 2, 0, (1 - 1j) / 2], atol=1e-15
    )


def test_qubit_row_matches_kets():
    q = QubitEnsemble(6)
    np.testing.assert_allclose(gram_of(q.kets()), qubit_gram_row(q).matrix(), atol=1e-15)


def test_tensor_power_trivial_cases():
    G = qubit_gram_row(QubitEnsemble(5))
    np.testing.assert_allclose(tensor_power_gram(G, 0).first_row, np.ones(5))
    np.testing.assert_allclose(tensor_power_gram(G, 1).first_row, G.first_row)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_tensor_power_binomial_spectra(n):
    G = qubit_gram_row(QubitEnsemble(n))
    for k in range(n):
        expected = np.zeros(n)
        expected[: k + 1] = [n / 2**k * comb(k, i) for i in range(k + 1)]
        np.testing.assert_allclose(tensor_power_gram(G, k).spectrum(), expected, atol=1e-12)


def test_tensor_power_is_repeated_convolution(rng):
    base = CirculantGram.from_spectrum(rng.dirichlet(np.ones(7)) * 7)
    lam = identity_spectrum(7)
    for j in range(5):
        np.testing.assert_allclose(tensor_power_gram(base, j).spectrum(), lam, atol=1e-10)
        lam = circular_convolution(lam, base.spectrum())


def test_gram_of_examples():
    np.testing.assert_allclose(gram_of(np.eye(3)), np.eye(3))
    np.testing.assert_allclose(gram_of([[0.6, 0.8j]] * 4), np.ones((4, 4)), atol=1e-15)
    with pytest.raises(DimensionMismatch):
        gram_of([[1, 0], [1, 0, 0]])


def test_is_symmetric_set():
    assert is_symmetric_set(CirculantGram.from_spectrum([2, 0.5, 0.5]).matrix())
    assert is_symmetric_set(coherent_gram_row(CoherentEnsemble(0.9, 6)).matrix())
    assert not is_symmetric_set(gram_of([[1, 0], [1, 0], [0, 1]]))
    with pytest.raises(NotSquare):
        is_symmetric_set(np.ones((2, 3)))

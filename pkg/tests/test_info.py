import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_spectrum
from symtrans.coherent2qubit import leak_gram, probability_vector
from symtrans.errors import InvalidSpectrum
from symtrans.info import entropy_bound, report
from symtrans.linalg import identity_spectrum
from symtrans.solver import TransformSolution, optimize_uniform
from symtrans.states import CoherentEnsemble, QubitEnsemble, coherent_gram_row, qubit_gram_row


def test_extremes():
    assert entropy_bound(identity_spectrum(6)) == 0.0
    assert entropy_bound(np.ones(8)) == pytest.approx(3.0)
    assert entropy_bound(qubit_gram_row(QubitEnsemble(10)).spectrum()) == pytest.approx(1.0)


def test_matches_von_neumann_of_average_state(rng):
    lam = random_spectrum(rng, 5, 0.2)
    from symtrans.linalg import synthesize_states_from_spectrum

    K = synthesize_states_from_spectrum(lam)
    rho = sum(np.outer(k, k.conj()) for k in K) / len(K)
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > 1e-14]
    assert entropy_bound(lam) == pytest.approx(-np.sum(ev * np.log2(ev)), abs=1e-10)


def test_invalid():
    with pytest.raises(InvalidSpectrum):
        entropy_bound([3, -1])


@given(st.integers(2, 12), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_permutation_invariant(n, r):
    rng = np.random.default_rng(r.randint(0, 2**32))
    lam = random_spectrum(rng, n, 0.3)
    assert entropy_bound(rng.permutation(lam)) == pytest.approx(entropy_bound(lam), abs=1e-12)


def test_concave(rng):
    for _ in range(100):
        n = int(rng.integers(2, 10))
        a, b = random_spectrum(rng, n, 0.3), random_spectrum(rng, n, 0.3)
        assert entropy_bound((a + b) / 2) >= (entropy_bound(a) + entropy_bound(b)) / 2 - 1e-10


def test_report_flags():
    n = 4
    ones = identity_spectrum(n)
    r = report(TransformSolution(1.0, ones, ones, np.ones(n), np.ones(n)))
    assert r.leak_bits == 0 and r.redundancy_bits == 0


def test_report_coherent_to_qubit_matches_constructive_leak():
    alpha, n = 0.5, 4
    la = coherent_gram_row(CoherentEnsemble(alpha, n)).spectrum()
    lb = qubit_gram_row(QubitEnsemble(n)).spectrum()
    r = report(optimize_uniform(la, lb))
    expected = entropy_bound(leak_gram(probability_vector(alpha, n), n).spectrum())
    assert r.leak_bits == pytest.approx(expected, abs=1e-9)
    assert r.redundancy_bits == 0.0

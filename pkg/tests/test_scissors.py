import math

import numpy as np
import pytest

from symtrans.coherent2qubit import optimal_probability
from symtrans.errors import AmplitudeOutOfRange, SplitTooCoarse
from symtrans.scissors import (
    default_grid,
    evaluate,
    figure1_data,
    figure6_data,
    ost_output,
    overall_with_splits,
)


def test_ost_output():
    np.testing.assert_allclose(ost_output(1.0, 0.0), [1 / math.sqrt(2)] * 2, atol=1e-15)
    np.testing.assert_allclose(ost_output(1e-9, 1.3), [1, 0], atol=1e-8)
    assert np.linalg.norm(ost_output(0.6, 2.0)) == pytest.approx(1)


def test_evaluate_alpha_one():
    ev = evaluate(1.0)
    assert ev.p_ost == pytest.approx(2 / math.e, abs=1e-12)
    assert ev.p_umbrella == 1.0 and ev.gamma == 0.0
    assert ev.p_overall == pytest.approx(ev.p_ost * ev.p_umbrella, abs=1e-15)


@pytest.mark.parametrize("alpha", np.linspace(0.05, 1.0, 20))
def test_ratio_identity(alpha):
    ev = evaluate(alpha)
    a2 = alpha**2
    assert optimal_probability(alpha) / ev.p_overall == pytest.approx(math.sinh(a2) / a2, rel=1e-10)
    assert ev.p_overall <= optimal_probability(alpha)


def test_umbrella_rebalances_amplitudes():
    # after gamma|0><0| failure, the vacuum amplitude equals alpha times the one-photon amplitude
    alpha = 0.6
    ev = evaluate(alpha)
    v = ost_output(alpha, 0.0)
    kept = np.array([math.sqrt(1 - ev.gamma) * v[0], v[1]])
    assert abs(kept[0]) == pytest.approx(abs(kept[1]))
    assert np.vdot(kept, kept).real == pytest.approx(ev.p_umbrella)


def test_evaluate_errors():
    with pytest.raises(AmplitudeOutOfRange):
        evaluate(1.2)
    with pytest.raises(AmplitudeOutOfRange):
        evaluate(0.0)


def test_splits():
    for alpha in (0.3, 0.9):
        assert overall_with_splits(alpha, 1) == pytest.approx(evaluate(alpha).p_overall, abs=1e-15)
    for alpha in (0.25, 0.5, 1.0):
        assert overall_with_splits(alpha, 10**5) == pytest.approx(optimal_probability(alpha), abs=1e-4)
    assert overall_with_splits(2.0, 4) > 0
    with pytest.raises(SplitTooCoarse):
        overall_with_splits(2.0, 3)
    with pytest.raises(ValueError):
        overall_with_splits(0.5, 0)


def test_default_grid():
    g = default_grid(1.5)
    assert g.size == 150 and g[0] == pytest.approx(0.01) and g[-1] == pytest.approx(1.5)


def test_figure1():
    t = figure1_data()
    assert list(t.curves) == ["optimal", "uds_N4", "uds_N8"]
    i = int(np.argmin(np.abs(t.alpha - 1.0)))
    assert t.curves["optimal"][i] == pytest.approx(0.864665, abs=1e-6)
    assert np.all(t.curves["uds_N4"] <= t.curves["optimal"])
    assert np.all(t.curves["uds_N8"] <= t.curves["uds_N4"] + 1e-15)
    assert len(list(t.rows())) == 150 * 3


def test_figure6():
    t = figure6_data()
    assert t.curves["split_M1"][-1] == pytest.approx(2 / math.e, abs=1e-12)
    stack = np.array([t.curves[f"split_M{m}"] for m in range(1, 11)])
    assert np.all(np.diff(stack, axis=0) > 0)
    assert np.all(stack < t.curves["optimal"])


def test_figure_custom_grid():
    t = figure6_data([0.5, 0.8], ms=(2,))
    assert list(t.rows())[0] == (0.5, "optimal", optimal_probability(0.5))
    with pytest.raises(ValueError):
        figure1_data([0.0, 0.5])

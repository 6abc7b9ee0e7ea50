import math

import pytest

from hhht import analysis, recurrence
from hhht.analysis import ContourConfig


def test_leading_term_at_100():
    assert analysis.leading_term(100) == pytest.approx(0.02820948, abs=5e-9)


def test_ratio_at_100_from_exact_delta():
    (rec,) = analysis.asymptotic_table([100])
    assert rec.delta == float(recurrence.delta_exact(100))
    # the ratio approaches 1 from below
    assert 0.999 < rec.ratio < 1


def test_scaled_error_is_bounded():
    recs = analysis.asymptotic_table([10, 100, 1000, 10_000])
    assert all(r.leading > 0 for r in recs)
    # observed: 0.0510, 0.0169, 0.0176, 0.0176
    assert max(r.scaled_err for r in recs) < 0.06
    # n (ratio - 1) -> -1/16 gives scaled_err -> 1/(32 sqrt(pi))
    assert recs[-1].scaled_err == pytest.approx(1 / (32 * math.sqrt(math.pi)), rel=0.01)


def test_table_rejects_small_n():
    with pytest.raises(ValueError):
        analysis.asymptotic_table([2])


def test_table_uses_float_mode_past_exact_limit(monkeypatch):
    monkeypatch.setattr(analysis, "EXACT_LIMIT", 50)
    (rec,) = analysis.asymptotic_table([60])
    assert rec.delta == pytest.approx(float(recurrence.delta_exact(60)), rel=1e-12)


def test_frozen_c1_covers_calibration():
    c1, n_at = analysis.calibrate_c1(100, 2000)
    assert c1 <= analysis.ASYMPTOTIC_C1
    assert n_at == 2000


@pytest.mark.parametrize("n,expected", [(2, 0.0), (3, 0.125)])
def test_contour_small(n, expected):
    assert analysis.contour_delta(n) == pytest.approx(expected, abs=1e-8)


def test_contour_n10_matches_exact():
    assert abs(analysis.contour_delta(10) - float(recurrence.delta_exact(10))) <= 1e-6


def test_contour_matches_exact_up_to_20():
    for n in range(2, 21):
        assert abs(analysis.contour_delta(n) - float(recurrence.delta_exact(n))) <= 1e-6


@pytest.mark.parametrize("radius", [0.5, 0.65, 0.8, 0.9])
def test_contour_radius_invariance(radius):
    cfg = ContourConfig(radius=radius)
    for n in range(2, 13):
        assert analysis.contour_delta(n, cfg) == pytest.approx(analysis.contour_delta(n), abs=1e-6)


def test_contour_imaginary_residual_is_small():
    for n in (5, 20, 32):
        assert abs(analysis.contour_integral(n).imag) < 1e-8


def test_contour_residual_guard():
    with pytest.raises(analysis.ContourAccuracyError):
        analysis.contour_delta(20, imag_tol=0.0)


def test_contour_is_deterministic():
    assert analysis.contour_integral(17) == analysis.contour_integral(17)


@pytest.mark.parametrize("kwargs", [{"radius": 1.0}, {"radius": 0.0}, {"radius": 1.5}, {"points": 32}])
def test_contour_config_validation(kwargs):
    with pytest.raises(ValueError):
        ContourConfig(**kwargs)


def test_contour_rejects_n1():
    with pytest.raises(ValueError):
        analysis.contour_delta(1)


def test_contour_sign_orientation():
    # a flipped orientation would give -Delta_n
    assert analysis.contour_delta(6) == pytest.approx(float(recurrence.delta_exact(6)), abs=1e-12)

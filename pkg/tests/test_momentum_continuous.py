import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxmode import (
    MomentumGrid,
    WellSpec,
    amplitude_transform,
    analytic_density,
    analytic_density_ground,
    default_grid,
    eigenfunction,
    spectrum,
    uncertainty_product,
)

# Ground-state landmarks in natural units (a = m = hbar = 1), frozen from
# the closed forms 4/(pi sqrt(2 pi)), 8/pi^3 and 1/(2 pi).
GROUND_AMPLITUDE_AT_ZERO = 0.507949087474
GROUND_DENSITY_AT_ZERO = 0.258012275466
GROUND_DENSITY_AT_SPIKE = 0.159154943092

# Trapezoid norm of the sampled ground-state density on the default grid.
GROUND_TRAPEZOID_NORM = 0.999983011004


def test_ground_amplitude_at_origin(spec):
    amp = amplitude_transform(spec, 1, 0.0)
    assert amp.real == pytest.approx(GROUND_AMPLITUDE_AT_ZERO, abs=1e-12)
    assert abs(amp.imag) < 1e-15


def test_ground_density_landmarks(spec):
    assert analytic_density_ground(spec, 0.0) == pytest.approx(
        GROUND_DENSITY_AT_ZERO, abs=1e-12
    )
    k1 = spec.spike_momentum(1)
    assert analytic_density_ground(spec, k1) == pytest.approx(
        GROUND_DENSITY_AT_SPIKE, abs=1e-12
    )
    assert analytic_density_ground(spec, -k1) == pytest.approx(
        GROUND_DENSITY_AT_SPIKE, abs=1e-12
    )


def test_density_value_at_spike_is_level_independent(spec):
    # The removable singularity fills in to a/(2 pi hbar) for every level.
    expected = spec.half_width / (2.0 * np.pi * spec.hbar)
    for n in (1, 2, 3, 7):
        p = spec.spike_momentum(n)
        assert analytic_density(spec, n, p) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("n", range(1, 9))
def test_transform_matches_closed_form(spec, n):
    """Quadrature transform and the closed-form density agree everywhere,
    including points straddling the near-spike branch of the formula."""
    rng = np.random.default_rng(100 + n)
    k = spec.wavenumber(n)
    p = np.concatenate(
        [
            rng.uniform(-6.0 * k, 6.0 * k, 400),
            k + np.array([-1e-3, -1e-5, -1e-7, 0.0, 1e-7, 1e-5, 1e-3]),
            -k + np.array([-1e-5, 0.0, 1e-5]),
        ]
    )
    quad = np.abs(amplitude_transform(spec, n, p)) ** 2
    closed = analytic_density(spec, n, p)
    np.testing.assert_allclose(quad, closed, atol=1e-12)


def test_branch_crossover_is_seamless(spec):
    # Density evaluated just inside and just outside the near-spike band
    # must agree to the local slope, not jump.
    k = spec.wavenumber(3)
    band = 1e-4 / spec.half_width
    u = np.array([-1.02, -0.98, 0.98, 1.02]) * band
    values = analytic_density(spec, 3, k + u)
    assert abs(values[0] - values[1]) < 1e-6
    assert abs(values[2] - values[3]) < 1e-6


@pytest.mark.parametrize("n", [1, 2, 5])
def test_momentum_reflection_symmetries(spec, n):
    # Real states: amplitude(-p) = conj(amplitude(p)); definite parity adds
    # amplitude(-p) = parity * amplitude(p) on top.
    grid = MomentumGrid(p_max=30.0, count=501)
    amp = amplitude_transform(spec, n, grid.points)
    np.testing.assert_allclose(amp[::-1], np.conj(amp), atol=1e-13)
    sign = 1.0 if n % 2 == 1 else -1.0
    np.testing.assert_allclose(amp[::-1], sign * amp, atol=1e-13)


def test_default_grid_shape(spec):
    grid = default_grid(spec, 3)
    assert grid.count == 4001
    assert grid.p_max == pytest.approx(20.0 * spec.spike_momentum(3), rel=1e-15)
    assert grid.points[0] == -grid.p_max
    assert grid.points[-1] == grid.p_max
    assert grid.points[grid.count // 2] == 0.0


def test_trapezoid_norm_frozen(spec):
    result = spectrum(spec, 1)
    assert result.norm_trapezoid() == pytest.approx(GROUND_TRAPEZOID_NORM, abs=1e-9)


@pytest.mark.parametrize("n", [1, 4, 10])
def test_trapezoid_norm_bounds(spec, n):
    norm = spectrum(spec, n).norm_trapezoid()
    assert 0.999 <= norm <= 1.0 + 1e-9


def test_norm_improves_with_momentum_window(spec):
    """Truncation defect of the sampled norm falls as the window widens."""
    k1 = spec.spike_momentum(1)
    defects = []
    for factor, count in [(10.0, 2001), (20.0, 4001), (40.0, 8001)]:
        grid = MomentumGrid(p_max=factor * k1, count=count)
        norm = spectrum(spec, 1, grid).norm_trapezoid()
        defects.append(abs(1.0 - norm))
    assert defects[0] > defects[1] > defects[2]
    assert defects[-1] < 1e-3


def test_spectrum_peaks_flank_the_spikes(spec):
    # The density maxima sit a little inside the spike momenta: the
    # two-sided envelope grows toward the spike but the lobe pattern cuts
    # it off within one lobe spacing (pi hbar / half_width).
    result = spectrum(spec, 3)
    k3 = spec.spike_momentum(3)
    lo, hi = result.peak_momenta()
    assert lo == -hi
    lobe = np.pi * spec.hbar / spec.half_width
    assert k3 - lobe < hi <= k3 + result.grid.step


def test_uncertainty_frozen_values(spec):
    width, momentum, product = uncertainty_product(spec, 1)
    assert width == pytest.approx(0.361512055191, abs=1e-12)
    assert momentum == pytest.approx(np.pi / 2.0, rel=1e-15)
    assert product == pytest.approx(0.567861808387, abs=1e-12)


def test_uncertainty_momentum_spread_is_spike_momentum(spec):
    for n in (1, 2, 9):
        assert uncertainty_product(spec, n).momentum_width == spec.spike_momentum(n)


@given(n=st.integers(min_value=1, max_value=50))
@settings(max_examples=30, deadline=None)
def test_uncertainty_exceeds_lower_bound(n):
    spec = WellSpec()
    result = uncertainty_product(spec, n)
    assert result.product > 0.5 * spec.hbar
    assert result.position_width < spec.half_width


@pytest.mark.parametrize(
    "kwargs",
    [
        {"p_max": 0.0, "count": 101},
        {"p_max": -3.0, "count": 101},
        {"p_max": 1.0, "count": 100},
        {"p_max": 1.0, "count": 1},
    ],
)
def test_invalid_grid_rejected(kwargs):
    with pytest.raises(ValueError):
        MomentumGrid(**kwargs)


def test_transform_scalar_returns_complex(spec):
    value = amplitude_transform(spec, 2, 1.5)
    assert isinstance(value, complex)


def test_custom_units_peak_density():
    custom = WellSpec(half_width=2.5, mass=0.7, hbar=1.3)
    p1 = custom.spike_momentum(1)
    expected = custom.half_width / (2.0 * np.pi * custom.hbar)
    assert analytic_density(custom, 1, p1) == pytest.approx(expected, rel=1e-12)
    quad = abs(amplitude_transform(custom, 1, 0.3 * p1)) ** 2
    closed = analytic_density(custom, 1, 0.3 * p1)
    assert quad == pytest.approx(closed, abs=1e-13)

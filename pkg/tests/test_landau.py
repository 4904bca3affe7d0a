import numpy as np
import pytest

from boxmode import (
    GridField2D,
    LandauSpec,
    ResolutionError,
    commutator_check,
    conductance_quantum,
    degeneracy,
    field_overlap,
    gaussian_test_state,
    hall_current,
    hamiltonian_residual,
    hermite,
    landau_gauge,
    landau_gauge_state,
    level_energy,
    radial_peak,
    ring_radius,
    symmetric_gauge,
    symmetric_gauge_state,
    vortex_lattice_constant,
    vortex_state,
)
from boxmode.landau import _axis, _centered_axis

RESIDUAL_LIMIT = 1e-3


def ridge_grid(spec, p_x, scale=1.0):
    """A compact rectangle holding the full y-profile of one ridge state."""
    length = spec.magnetic_length
    step = length / (8.0 * scale)
    y_guide = -spec.light_speed * p_x / (spec.charge * spec.B)
    return (
        _axis(0.0, 4.0 * length, step),
        y_guide + _centered_axis(8.0 * length, step),
    )


def test_spec_validation():
    with pytest.raises(ValueError):
        LandauSpec(B=0.0)
    with pytest.raises(ValueError):
        LandauSpec(B=-1.0)
    with pytest.raises(ValueError):
        LandauSpec(charge=0.0)
    with pytest.raises(ValueError):
        LandauSpec(mass=-2.0)
    with pytest.raises(ValueError):
        LandauSpec(Lx=0.0)


def test_natural_preset(landau):
    assert landau.B == 1.0
    assert landau.charge == -1.0
    assert landau.cyclotron_frequency == 1.0
    assert landau.magnetic_length == 1.0
    assert landau.flux == 100.0
    assert landau.flux_quantum == pytest.approx(2.0 * np.pi, rel=1e-15)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"B": 2.5, "charge": -1.0, "mass": 1.0, "light_speed": 1.0, "hbar": 1.0},
        {"B": 0.7, "charge": 2.0, "mass": 3.0, "light_speed": 137.0, "hbar": 0.5},
    ],
)
def test_derived_scales(kwargs):
    spec = LandauSpec(**kwargs)
    q, B = abs(kwargs["charge"]), kwargs["B"]
    m, c, hbar = kwargs["mass"], kwargs["light_speed"], kwargs["hbar"]
    assert spec.cyclotron_frequency == pytest.approx(q * B / (m * c), rel=1e-15)
    assert spec.magnetic_length == pytest.approx(np.sqrt(hbar * c / (q * B)), rel=1e-15)
    assert spec.flux_quantum == pytest.approx(2.0 * np.pi * hbar * c / q, rel=1e-15)


def test_level_energies(landau):
    assert level_energy(landau, 0) == pytest.approx(0.5, rel=1e-15)
    assert level_energy(landau, 3) == pytest.approx(3.5, rel=1e-15)
    spacing = level_energy(landau, 7) - level_energy(landau, 6)
    assert spacing == pytest.approx(landau.hbar * landau.cyclotron_frequency, rel=1e-14)
    for bad in (-1, 0.5, True):
        with pytest.raises(ValueError):
            level_energy(landau, bad)


def test_gauge_fields():
    gauge = landau_gauge(2.0)
    ax, ay = gauge.vector_potential(1.0, 3.0)
    assert ax == -6.0 and ay == 0.0
    assert gauge.curl == 2.0
    sym = symmetric_gauge(2.0)
    ax, ay = sym.vector_potential(1.0, 3.0)
    assert ax == -3.0 and ay == 1.0
    assert sym.curl == 2.0
    with pytest.raises(ValueError):
        from boxmode import GaugeField

        GaugeField(name="radial", B=1.0)


def test_hermite_against_numpy(rng):
    x = rng.uniform(-4.0, 4.0, 50)
    for n in range(13):
        coeffs = np.zeros(n + 1)
        coeffs[n] = 1.0
        expected = np.polynomial.hermite.hermval(x, coeffs)
        np.testing.assert_allclose(hermite(n, x), expected, rtol=1e-12, atol=1e-9)


def test_hermite_frozen_value_and_validation():
    assert hermite(2, 0.3) == pytest.approx(-1.64, rel=1e-15)
    with pytest.raises(ValueError):
        hermite(-1, 0.0)
    with pytest.raises(ValueError):
        hermite(True, 0.0)


def test_grid_field_contracts():
    x = np.linspace(0.0, 1.0, 9)
    y = np.linspace(0.0, 2.0, 17)
    good = np.ones((9, 17), dtype=complex)
    good /= np.sqrt(np.sum(np.abs(good) ** 2) * (x[1] - x[0]) * (y[1] - y[0]))
    field = GridField2D(x=x, y=y, values=good)
    assert field.norm() == pytest.approx(1.0, abs=1e-12)

    with pytest.raises(ValueError, match="norm"):
        GridField2D(x=x, y=y, values=2.0 * good)
    with pytest.raises(ValueError):
        GridField2D(x=x, y=y, values=good[:5, :])
    ragged = x.copy()
    ragged[3] += 0.01
    with pytest.raises(ValueError, match="uniform"):
        GridField2D(x=ragged, y=y, values=good)


@pytest.mark.parametrize("n, k", [(0, 0.0), (0, 0.5), (0, 1.0), (1, 0.5)])
def test_ridge_states_are_eigenstates(landau, n, k):
    """Plane-wave-times-profile states solve the eigenproblem on the grid to
    a few parts in 1e4 relative to the level spacing."""
    p_x = k * landau.hbar / landau.magnetic_length
    state = landau_gauge_state(landau, n, p_x, grid=ridge_grid(landau, p_x))
    residual = hamiltonian_residual(
        landau, landau_gauge(landau.B), state, level_energy(landau, n)
    )
    assert residual < RESIDUAL_LIMIT


@pytest.mark.parametrize("n, angular", [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)])
def test_ring_states_are_eigenstates(landau, n, angular):
    state = symmetric_gauge_state(landau, n, angular)
    residual = hamiltonian_residual(
        landau, symmetric_gauge(landau.B), state, level_energy(landau, n)
    )
    assert residual < RESIDUAL_LIMIT


def test_ring_state_energy_ignores_angular_index(landau):
    # The angular index moves probability outward but not the energy: the
    # residual against the n = 0 energy stays small for every ring.
    gauge = symmetric_gauge(landau.B)
    e0 = level_energy(landau, 0)
    residuals = [
        hamiltonian_residual(landau, gauge, symmetric_gauge_state(landau, 0, L), e0)
        for L in range(4)
    ]
    assert max(residuals) < RESIDUAL_LIMIT


def test_residual_drops_at_fourth_order(landau):
    """Halving the grid step cuts the eigenvalue defect by roughly 2^4."""
    p_x = 0.5 * landau.hbar / landau.magnetic_length
    gauge = landau_gauge(landau.B)
    e0 = level_energy(landau, 0)
    coarse = hamiltonian_residual(
        landau, gauge, landau_gauge_state(landau, 0, p_x, grid=ridge_grid(landau, p_x)), e0
    )
    fine = hamiltonian_residual(
        landau,
        gauge,
        landau_gauge_state(landau, 0, p_x, grid=ridge_grid(landau, p_x, scale=2.0)),
        e0,
    )
    assert coarse / fine > 4.0


def test_coarse_grid_rejected(landau):
    length = landau.magnetic_length
    axis = _centered_axis(8.0 * length, length / 4.0)
    state = symmetric_gauge_state(landau, 0, 0, grid=(axis, axis))
    with pytest.raises(ResolutionError):
        hamiltonian_residual(
            landau, symmetric_gauge(landau.B), state, level_energy(landau, 0)
        )


def test_tiny_grid_rejected(landau):
    length = landau.magnetic_length
    axis = _centered_axis(0.3 * length, length / 8.0)
    state = symmetric_gauge_state(landau, 0, 0, grid=(axis, axis))
    with pytest.raises(ResolutionError, match="margin"):
        commutator_check(landau, symmetric_gauge(landau.B), state)


def test_guiding_line_outside_rectangle_warns(landau):
    with pytest.warns(UserWarning, match="outside"):
        landau_gauge_state(landau, 0, -1.0, grid=ridge_grid(landau, -1.0))
    with pytest.warns(UserWarning, match="outside"):
        landau_gauge_state(landau, 0, 10.7, grid=ridge_grid(landau, 10.7))


def test_commutator_closes_in_both_gauges(landau):
    probe = gaussian_test_state(landau)
    assert commutator_check(landau, landau_gauge(landau.B), probe) < 1e-3
    assert commutator_check(landau, symmetric_gauge(landau.B), probe) < 1e-3


def test_commutator_vanishes_without_field(landau):
    probe = gaussian_test_state(landau)
    free = landau_gauge(0.0)
    assert commutator_check(landau, free, probe) < 1e-10


def test_vortex_overlap_law(landau):
    """Overlap magnitude between displaced vortex states follows the
    Gaussian law exp(-(d / 2 length)^2)."""
    length = landau.magnetic_length
    for d in (0.5 * length, 1.5 * length, vortex_lattice_constant(landau)):
        axis = _centered_axis(8.0 * length + d, length / 8.0)
        grid = (axis, axis)
        here = vortex_state(landau, 0.0 + 0.0j, grid=grid)
        there = vortex_state(landau, complex(d, 0.0), grid=grid)
        expected = np.exp(-((d / (2.0 * length)) ** 2))
        assert abs(field_overlap(here, there)) == pytest.approx(expected, abs=1e-9)


def test_lattice_constant_overlap_value(landau):
    d = vortex_lattice_constant(landau)
    assert d == pytest.approx(np.sqrt(2.0 * np.pi), rel=1e-15)
    length = landau.magnetic_length
    axis = _centered_axis(8.0 * length + d, length / 8.0)
    here = vortex_state(landau, 0.0 + 0.0j, grid=(axis, axis))
    there = vortex_state(landau, complex(0.0, d), grid=(axis, axis))
    assert abs(field_overlap(here, there)) == pytest.approx(
        0.2078795763507619, abs=1e-9
    )


def test_vortex_modulus_is_centered_gaussian(landau):
    length = landau.magnetic_length
    center = complex(1.5 * length, -0.75 * length)
    state = vortex_state(landau, center)
    X, Y = state.meshes()
    r2 = (X - center.real) ** 2 + (Y - center.imag) ** 2
    envelope = np.exp(-r2 / (4.0 * length**2))
    envelope /= np.sqrt(np.sum(envelope**2) * state.dx * state.dy)
    np.testing.assert_allclose(np.abs(state.values), envelope, atol=1e-12)


def test_displaced_vortex_stays_in_lowest_level(landau):
    state = vortex_state(landau, complex(2.0, 1.0))
    residual = hamiltonian_residual(
        landau, symmetric_gauge(landau.B), state, level_energy(landau, 0)
    )
    assert residual < RESIDUAL_LIMIT


def test_ring_radii_match_prediction(landau):
    for angular in range(1, 6):
        state = symmetric_gauge_state(landau, 0, angular)
        assert radial_peak(state) == pytest.approx(
            ring_radius(landau, angular), rel=5e-3
        )


def test_rings_enclose_equal_areas(landau):
    """Successive ring maxima bound annuli of area one flux quantum's worth,
    2 pi length^2, to within five percent."""
    length = landau.magnetic_length
    radii = [radial_peak(symmetric_gauge_state(landau, 0, L)) for L in range(1, 6)]
    areas = np.pi * np.diff(np.array(radii) ** 2)
    np.testing.assert_allclose(areas, 2.0 * np.pi * length**2, rtol=5e-2)


def test_degeneracy_three_ways(landau):
    report = degeneracy(landau)
    assert report.ratio == pytest.approx(100.0 / (2.0 * np.pi), rel=1e-14)
    assert report.flux_count == 15
    assert report.guiding_center_count == 16
    assert report.ring_count == 16
    assert report.spread <= 1


@pytest.mark.parametrize(
    "B, Lx, Ly", [(0.5, 5.0, 5.0), (2.0, 15.0, 20.0), (1.3, 25.0, 24.7)]
)
def test_degeneracy_counts_agree_within_one(B, Lx, Ly):
    report = degeneracy(LandauSpec.natural(B=B, Lx=Lx, Ly=Ly))
    assert report.flux_count == int(report.ratio)
    assert report.spread <= 1


def test_hall_conductance_is_quantized(landau):
    report = hall_current(landau, voltage=1.0)
    assert report.per_electron_current == pytest.approx(-0.01, rel=1e-14)
    assert report.per_level_current == pytest.approx(-1.0 / (2.0 * np.pi), rel=1e-14)
    assert report.conductance == pytest.approx(conductance_quantum(landau), rel=1e-15)
    assert report.conductance_in_quanta == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize(
    "B, Lx, Ly, voltage",
    [(0.3, 7.0, 4.0, 0.25), (4.0, 12.0, 33.0, -2.0), (1.0, 10.0, 10.0, 5.0)],
)
def test_hall_conductance_independent_of_geometry(B, Lx, Ly, voltage):
    spec = LandauSpec.natural(B=B, Lx=Lx, Ly=Ly)
    report = hall_current(spec, voltage)
    assert report.conductance == pytest.approx(1.0 / (2.0 * np.pi), rel=1e-13)


def test_hall_rejects_zero_voltage(landau):
    with pytest.raises(ValueError):
        hall_current(landau, 0.0)


def test_radial_peak_requires_axis_row(landau):
    length = landau.magnetic_length
    x = _centered_axis(6.0 * length, length / 8.0)
    y = x + length / 16.0
    state = symmetric_gauge_state(landau, 0, 1, grid=(x, y))
    with pytest.raises(ValueError, match="y = 0"):
        radial_peak(state)

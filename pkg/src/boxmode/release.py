"""Sudden release: free flight of a box state after the walls are removed.

Evolution happens on a periodic grid much longer than the box, by exact
multiplication with the free-particle phase in the discrete Fourier basis.
The far-field helpers map late-time position densities onto the momentum
axis, where they converge to the continuous momentum density.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .well import Eigenfunction, WellSpec, _check_level


class AliasingError(RuntimeError):
    """The evolved state reached the periodic box edge; wrap-around would alias."""


# Probability density tolerated at the box edge, per unit 1/half_width.
_EDGE_DENSITY_LIMIT = 1e-10


@dataclass(frozen=True)
class EvolutionSnapshot:
    """State of the released particle at one instant, on a uniform grid."""

    t: float
    x: np.ndarray
    psi: np.ndarray

    def __post_init__(self):
        if self.x.ndim != 1 or self.x.shape != self.psi.shape:
            raise ValueError("x and psi must be 1-D arrays of equal length")
        if self.x.size < 2:
            raise ValueError("a snapshot needs at least two samples")
        norm = float(np.sum(np.abs(self.psi) ** 2) * self.dx)
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"snapshot norm is {norm:.8f}, expected 1 within 1e-6")

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def box_length(self) -> float:
        return self.dx * self.x.size

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.psi) ** 2

    def norm(self) -> float:
        return float(np.sum(self.density) * self.dx)


def _tail_momenta(spec: WellSpec, n: int, t: float):
    """Momentum scales controlling how far the released state spreads.

    Returns (p_quantile, p_edge): the momentum beyond which roughly 1e-4 of
    the state's weight lies, and the momentum whose envelope tail density,
    transported to the box edge at time t, drops to ~1e-11/half_width. The
    envelope used is the exact large-|p| form 2 k_n^2 hbar^3/(pi a p^4).
    """
    a, m, hbar = spec.half_width, spec.mass, spec.hbar
    k_n = spec.wavenumber(n)
    p_quantile = (2.0e4 * k_n**2 * hbar**3 / (3.0 * np.pi * a)) ** (1.0 / 3.0)
    if t > 0:
        edge_eps = 1.25e-11 / a
        p_edge = (2.0 * m * k_n**2 * hbar**2 / (np.pi * a * t * edge_eps)) ** 0.25
    else:
        p_edge = 0.0
    return p_quantile, p_edge


def _pow2_at_least(value: float) -> int:
    return 1 << max(0, int(np.ceil(np.log2(value))))


def suggested_box(spec: WellSpec, n: int, t: float) -> tuple[float, int]:
    """A (length, samples) pair keeping edge leakage negligible at time t.

    The grid step is half_width/128 with the walls landing exactly on grid
    nodes; the length covers both the bulk spread and the slow power-law
    tails, with a floor of 16 half-widths. Samples are a power of two.
    """
    n = _check_level(n)
    a, m = spec.half_width, spec.mass
    t = abs(float(t))
    dx = a / 128.0
    p_quantile, p_edge = _tail_momenta(spec, n, t)
    length = max(
        2.0 * a + 6.0 * (p_quantile / m) * t,
        2.0 * a + 2.0 * (p_edge / m) * t,
        16.0 * a,
    )
    samples = _pow2_at_least(length / dx)
    return samples * dx, samples


def farfield_box(
    spec: WellSpec, n: int, t: float, probe_max: float | None = None
) -> tuple[float, int]:
    """A (length, samples) pair sized for far-field accuracy at time t.

    Two effects limit how well the rescaled late-time density matches the
    momentum density, and both are controlled here:

    * the grid-sampling floor of the discrete transform, which scales as
      dx^2 — the step shrinks with t as dx = 2a/M, M = max(64,
      2*ceil(0.8 t hbar/(m a^2)));
    * wrap-around images of the packet, which vanish entirely (not merely
      decay) once the box is longer than (t/m)(pi hbar/dx + probe_max),
      because image packets beyond the grid's momentum band are evanescent.

    ``probe_max`` is the largest |p| the caller intends to inspect; it
    defaults to six spike momenta.
    """
    n = _check_level(n)
    if not t > 0:
        raise ValueError(f"far-field boxes need t > 0, got {t}")
    a, m, hbar = spec.half_width, spec.mass, spec.hbar
    if probe_max is None:
        probe_max = 6.0 * spec.spike_momentum(n)
    cells_across = max(64, 2 * int(np.ceil(0.8 * t * hbar / (m * a * a))))
    dx = 2.0 * a / cells_across
    p_nyquist = np.pi * hbar / dx
    p_quantile, p_edge = _tail_momenta(spec, n, t)
    length = max(
        (t / m) * (p_nyquist + probe_max) + 2.0 * a,
        2.0 * a + 2.0 * (p_edge / m) * t,
        2.0 * a + 6.0 * (p_quantile / m) * t,
        16.0 * a,
    )
    samples = _pow2_at_least(length / dx)
    return samples * dx, samples


def evolve_free(
    spec: WellSpec, n: int, t: float, box: tuple[float, int] | None = None
) -> EvolutionSnapshot:
    """Evolve stationary state n for time t after the walls vanish.

    ``box`` is a (length, samples) pair; samples must be a power of two.
    When omitted, ``suggested_box`` picks one. At t = 0 the samples
    reproduce the stationary state exactly. If noticeable probability
    reaches the periodic edge (density above 1e-10 per half_width), the
    result would wrap around and alias, so an AliasingError is raised.
    """
    n = _check_level(n)
    if box is None:
        box = suggested_box(spec, n, t)
    length, samples = box
    samples = int(samples)
    if samples < 4 or samples & (samples - 1):
        raise ValueError(f"sample count must be a power of two >= 4, got {samples}")
    if not length > 2.0 * spec.half_width:
        raise ValueError("box must be longer than the distance between the walls")

    dx = length / samples
    x = (np.arange(samples) - samples // 2) * dx
    psi0 = Eigenfunction(spec, n)(x).astype(complex)
    psi0 /= np.sqrt(np.sum(np.abs(psi0) ** 2) * dx)

    if t == 0:
        psi_t = psi0
    else:
        p = 2.0 * np.pi * spec.hbar * np.fft.fftfreq(samples, d=dx)
        phase = np.exp(-1j * p**2 * t / (2.0 * spec.mass * spec.hbar))
        psi_t = np.fft.ifft(np.fft.fft(psi0) * phase)

    snapshot = EvolutionSnapshot(t=float(t), x=x, psi=psi_t)
    edge_density = max(snapshot.density[0], snapshot.density[-1])
    if edge_density > _EDGE_DENSITY_LIMIT / spec.half_width:
        raise AliasingError(
            f"edge density {edge_density:.3e} exceeds "
            f"{_EDGE_DENSITY_LIMIT / spec.half_width:.1e}; "
            "enlarge the box or shorten the flight time"
        )
    return snapshot


class FarfieldCurve(NamedTuple):
    """Late-time density mapped onto the momentum axis."""

    p: np.ndarray
    density: np.ndarray

    def sample(self, p_values) -> np.ndarray:
        """Linear interpolation of the curve at the given momenta."""
        return np.interp(p_values, self.p, self.density)


def farfield_map(snapshot: EvolutionSnapshot, spec: WellSpec) -> FarfieldCurve:
    """Relabel a late-time snapshot as a momentum-density approximation.

    A freely spreading packet sorts itself ballistically: the amplitude near
    position x at late time t is carried by momentum p = m x / t, and the
    position density approaches |phi(p)|^2 * (m/t). Multiplying the density
    by t/m and relabeling the axis therefore yields a curve that converges
    to the continuous momentum density as t grows.
    """
    if snapshot.t <= 0:
        raise ValueError(f"the far-field map needs t > 0, got t = {snapshot.t}")
    p = spec.mass * snapshot.x / snapshot.t
    return FarfieldCurve(p=p, density=snapshot.density * (snapshot.t / spec.mass))


def grid_kinetic_energy(snapshot: EvolutionSnapshot, spec: WellSpec) -> float:
    """Mean kinetic energy of a snapshot from its discrete Fourier weights.

    Exactly conserved by ``evolve_free`` (the evolution multiplies each
    Fourier weight by a unimodular phase). It carries a small positive bias
    relative to the continuum energy because momentum weight beyond the
    grid's band folds back in; the bias shrinks with the grid step.
    """
    weights = np.abs(np.fft.fft(snapshot.psi)) ** 2
    weights /= weights.sum()
    p = 2.0 * np.pi * spec.hbar * np.fft.fftfreq(snapshot.x.size, d=snapshot.dx)
    return float((weights * p**2).sum() / (2.0 * spec.mass))

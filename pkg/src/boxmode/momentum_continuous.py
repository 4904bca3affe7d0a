"""Continuous momentum content of box states: amplitudes, densities, widths.

The momentum amplitude of a stationary state is its Fourier transform over
the box; its squared modulus is a smooth density with removable singular
points at the two wavenumbers of the standing wave. Everything here keeps
those points finite and accurate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .quadrature import QuadratureSettings
from .well import Eigenfunction, WellSpec, _check_level

# Half-width (in units of 1/a) of the band around |q| = k_n inside which the
# density is evaluated through its exact sinc rewrite instead of the raw
# quotient; the two expressions agree identically, the rewrite just avoids
# catastrophic cancellation in (k_n^2 - q^2)^2.
_NEAR_SPIKE_BAND = 1e-4


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform, symmetric momentum grid with an odd number of points.

    Odd counts guarantee p = 0 and the exact endpoints ±p_max are sampled.
    """

    p_max: float
    count: int = 4001

    def __post_init__(self):
        if not self.p_max > 0:
            raise ValueError(f"p_max must be positive, got {self.p_max}")
        if self.count < 3 or self.count % 2 == 0:
            raise ValueError(f"count must be an odd integer >= 3, got {self.count}")

    @property
    def points(self) -> np.ndarray:
        return np.linspace(-self.p_max, self.p_max, self.count)

    @property
    def step(self) -> float:
        return 2.0 * self.p_max / (self.count - 1)


def default_grid(spec: WellSpec, n: int) -> MomentumGrid:
    """Grid spanning ±20 spike momenta, wide enough for ~1e-5 tail mass."""
    n = _check_level(n)
    return MomentumGrid(p_max=20.0 * spec.spike_momentum(n))


def amplitude_transform(spec: WellSpec, n: int, p, quad: QuadratureSettings | None = None):
    """Momentum amplitude of state n: its Fourier transform over the box.

    Integrates psi_n(x) e^{-ipx/hbar} / sqrt(2 pi hbar) with Gauss-Legendre
    nodes, vectorized over p. Odd-numbered levels give purely real
    amplitudes and even-numbered levels purely imaginary ones; the numerical
    remainder in the other component stays near machine precision and is
    returned so callers can verify it.
    """
    quad = quad or QuadratureSettings()
    a = spec.half_width
    psi = Eigenfunction(spec, n)
    x, w = quad.nodes(-a, a)
    p_arr = np.asarray(p, dtype=float)
    kernel = np.exp(-1j * np.outer(p_arr.ravel(), x) / spec.hbar)
    values = kernel @ (w * psi(x)) / np.sqrt(2.0 * np.pi * spec.hbar)
    if p_arr.ndim == 0:
        return complex(values[0])
    return values.reshape(p_arr.shape)


def analytic_density(spec: WellSpec, n: int, p):
    """Closed-form momentum density of state n, finite on the whole axis.

    Away from the spike momenta this is
    ``4 k_n^2 / (2 pi hbar a) * trig^2(q a) / (k_n^2 - q^2)^2`` with
    q = p/hbar and trig = cos for odd n, sin for even n. Within a narrow
    band around |q| = k_n the same function is evaluated through the exact
    identity trig^2(qa) = sin^2(ua) with u = |q| - k_n, which collapses the
    quotient to ``(a sinc(ua/pi))^2 / (2 k_n + u)^2`` — finite, smooth, and
    cancellation-free across the removable points, where the density takes
    its exact limit a / (2 pi hbar).
    """
    n = _check_level(n)
    a = spec.half_width
    hbar = spec.hbar
    k_n = spec.wavenumber(n)
    q = np.asarray(p, dtype=float) / hbar
    scalar = q.ndim == 0
    q = np.atleast_1d(q)

    prefactor = 4.0 * k_n**2 / (2.0 * np.pi * hbar * a)
    u = np.abs(q) - k_n
    near = np.abs(u) < _NEAR_SPIKE_BAND / a
    trig = np.cos if n % 2 else np.sin

    out = np.empty_like(q)
    q_far = q[~near]
    out[~near] = prefactor * trig(q_far * a) ** 2 / (k_n**2 - q_far**2) ** 2
    lobe = a * np.sinc(u[near] * a / np.pi)
    out[near] = prefactor * (lobe / (2.0 * k_n + u[near])) ** 2
    return float(out[0]) if scalar else out


def analytic_density_ground(spec: WellSpec, p):
    """Closed-form momentum density of the ground state."""
    return analytic_density(spec, 1, p)


@dataclass(frozen=True)
class ContinuousMomentumSpectrum:
    """Momentum amplitude and density of one state, sampled on a grid."""

    level: int
    grid: MomentumGrid
    amplitude: np.ndarray
    density: np.ndarray

    def __post_init__(self):
        if self.amplitude.shape != (self.grid.count,) or self.density.shape != (self.grid.count,):
            raise ValueError("amplitude and density must match the grid point count")

    def norm_trapezoid(self) -> float:
        """Trapezoid integral of the density over the grid window."""
        return float(np.trapezoid(self.density, self.grid.points))

    def peak_momenta(self) -> tuple[float, float]:
        """Grid momenta of the density maxima on the negative and positive axes."""
        p = self.grid.points
        half = self.grid.count // 2
        neg = int(np.argmax(self.density[:half]))
        pos = half + int(np.argmax(self.density[half:]))
        return float(p[neg]), float(p[pos])


def spectrum(
    spec: WellSpec,
    n: int,
    grid: MomentumGrid | None = None,
    quad: QuadratureSettings | None = None,
) -> ContinuousMomentumSpectrum:
    """Sample the momentum amplitude of state n and its density on a grid."""
    n = _check_level(n)
    grid = grid or default_grid(spec, n)
    amplitude = amplitude_transform(spec, n, grid.points, quad=quad)
    return ContinuousMomentumSpectrum(
        level=n,
        grid=grid,
        amplitude=amplitude,
        density=np.abs(amplitude) ** 2,
    )


class UncertaintyProduct(NamedTuple):
    position_width: float
    momentum_width: float
    product: float


def uncertainty_product(spec: WellSpec, n: int) -> UncertaintyProduct:
    """Position width, momentum width, and their product for state n.

    Both widths are closed forms: the position variance is
    a^2 (1/3 - 2/(n pi)^2) and the momentum width is exactly the spike
    momentum hbar k_n (the density is an even function with <p> = 0 and
    <p^2> = (hbar k_n)^2). The product always exceeds hbar/2.
    """
    n = _check_level(n)
    variance_x = spec.half_width**2 * (1.0 / 3.0 - 2.0 / (n * np.pi) ** 2)
    dx = float(np.sqrt(variance_x))
    dp = spec.spike_momentum(n)
    return UncertaintyProduct(dx, dp, dx * dp)

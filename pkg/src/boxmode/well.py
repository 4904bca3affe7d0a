"""Stationary states of a particle confined between hard walls at x = ±a."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureSettings


def _check_level(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"level index must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"level index must be at least 1, got {n}")
    return int(n)


@dataclass(frozen=True)
class WellSpec:
    """A hard-wall box on the interval (-half_width, +half_width).

    All three parameters default to 1, i.e. natural units where energies come
    out as multiples of pi^2/8 and momenta as multiples of pi/2.
    """

    half_width: float = 1.0
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("half_width", "mass", "hbar"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")

    def wavenumber(self, n: int) -> float:
        """Wavenumber of the n-th stationary state, n*pi/(2*half_width)."""
        n = _check_level(n)
        return n * np.pi / (2.0 * self.half_width)

    def energy(self, n: int) -> float:
        """Energy of the n-th stationary state, (hbar*k_n)^2 / (2*mass)."""
        return (self.hbar * self.wavenumber(n)) ** 2 / (2.0 * self.mass)

    def spike_momentum(self, n: int) -> float:
        """Magnitude hbar*k_n shared by the two momentum spikes of state n."""
        return self.hbar * self.wavenumber(n)


class Eigenfunction:
    """Normalized stationary state, callable on scalars or arrays.

    Odd-numbered levels are even functions cos(k_n x)/sqrt(a); even-numbered
    levels are odd functions sin(k_n x)/sqrt(a). Both vanish identically
    outside the walls, including exactly at x = ±a.
    """

    def __init__(self, spec: WellSpec, n: int):
        self.spec = spec
        self.n = _check_level(n)
        self.wavenumber = spec.wavenumber(n)
        self._amplitude = 1.0 / np.sqrt(spec.half_width)
        self._trig = np.cos if self.n % 2 else np.sin

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) < self.spec.half_width
        values = np.where(inside, self._amplitude * self._trig(self.wavenumber * x), 0.0)
        return float(values) if values.ndim == 0 else values

    @property
    def parity(self) -> int:
        """+1 when psi(-x) = psi(x), -1 when psi(-x) = -psi(x)."""
        return 1 if self.n % 2 else -1

    @property
    def energy(self) -> float:
        return self.spec.energy(self.n)


def eigenfunction(spec: WellSpec, n: int) -> Eigenfunction:
    """The n-th normalized stationary state of the box."""
    return Eigenfunction(spec, n)


def state_overlap(spec: WellSpec, m: int, n: int, quad: QuadratureSettings | None = None) -> float:
    """Inner product of stationary states m and n over the box."""
    quad = quad or QuadratureSettings()
    x, w = quad.nodes(-spec.half_width, spec.half_width)
    return float((Eigenfunction(spec, m)(x) * Eigenfunction(spec, n)(x)) @ w)


def normalization_defect(spec: WellSpec, n: int, quad: QuadratureSettings | None = None) -> float:
    """|<n|n> - 1| for the n-th state, a direct quadrature sanity check."""
    return abs(state_overlap(spec, n, n, quad=quad) - 1.0)

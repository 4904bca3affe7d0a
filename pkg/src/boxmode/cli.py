"""Command line: compute tables, run consistency checks, write CSV files.

Grammar: ``boxmode <group> <command> [--flag value]...`` with groups
``well``, ``momentum``, ``release``, and ``landau``. Every command prints a
small report with one ``CHECK name: PASS|FAIL (residual=...)`` line per
consistency check, writes deterministic CSV files into ``--out``, and exits
0 when all checks pass, 1 when any fails, and 2 for invalid arguments
(in which case nothing is written).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path

import numpy as np

from .landau import (
    LandauSpec,
    _axis,
    _centered_axis,
    commutator_check,
    conductance_quantum,
    degeneracy,
    gaussian_test_state,
    hall_current,
    hamiltonian_residual,
    landau_gauge,
    landau_gauge_state,
    level_energy,
    symmetric_gauge,
    symmetric_gauge_state,
)
from .momentum_continuous import (
    MomentumGrid,
    analytic_density,
    default_grid,
    spectrum,
)
from .momentum_discrete import (
    convergence_report,
    eigenstate_spectrum,
    expand,
    matched_phase,
)
from .release import AliasingError, evolve_free, farfield_box, farfield_map, grid_kinetic_energy
from .report import CheckResult, all_passed, check, write_csv
from .well import Eigenfunction, WellSpec


class ConfigError(ValueError):
    """The configuration file or flag set cannot be used."""


@dataclass
class RunConfig:
    """Resolved run settings: units, output directory, print precision.

    Extra parameter sections from a config file ride along as plain string
    maps, so a config round-trips through text without loss.
    """

    units: str = "natural"
    digits: int = 12
    out: Path = Path(".")
    sections: dict = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if self.units not in ("natural", "custom"):
            raise ConfigError(f"units must be 'natural' or 'custom', got {self.units!r}")
        if not 1 <= int(self.digits) <= 17:
            raise ConfigError(f"digits must lie in 1..17, got {self.digits}")
        self.out = Path(self.out)

    def to_text(self) -> str:
        lines = [
            "[global]",
            f"units = {self.units}",
            f"digits = {self.digits}",
            f"out = {self.out}",
        ]
        for section in sorted(self.sections):
            lines.append(f"[{section}]")
            for key in sorted(self.sections[section]):
                lines.append(f"{key} = {self.sections[section][key]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        sections = parse_config(text)
        top = sections.pop("global", {})
        kwargs = {}
        if "units" in top:
            kwargs["units"] = top["units"]
        if "digits" in top:
            try:
                kwargs["digits"] = int(top["digits"])
            except ValueError as exc:
                raise ConfigError(f"digits must be an integer, got {top['digits']!r}") from exc
        if "out" in top:
            kwargs["out"] = Path(top["out"])
        return cls(sections=sections, **kwargs)


def parse_config(text: str) -> dict[str, dict[str, str]]:
    """Parse the flat ``key = value`` format with ``[section]`` headers.

    Lines starting with ``#`` and blank lines are skipped; keys before any
    header land in the ``global`` section.
    """
    sections: dict[str, dict[str, str]] = {}
    current = "global"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if not current:
                raise ConfigError(f"line {lineno}: empty section name")
            sections.setdefault(current, {})
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        sections.setdefault(current, {})[key] = value.strip()
    return sections


def _section_float(sections: dict, section: str, key: str, default: float) -> float:
    value = sections.get(section, {}).get(key)
    if value is None:
        return default
    try:
        return float(value)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key} must be a number, got {value!r}") from exc


def _well_spec(rc: RunConfig) -> WellSpec:
    if rc.units == "custom":
        return WellSpec(
            half_width=_section_float(rc.sections, "well", "half_width", 1.0),
            mass=_section_float(rc.sections, "well", "mass", 1.0),
            hbar=_section_float(rc.sections, "well", "hbar", 1.0),
        )
    return WellSpec()


def _landau_spec(rc: RunConfig, args) -> LandauSpec:
    if rc.units == "custom":
        return LandauSpec(
            B=args.field,
            charge=_section_float(rc.sections, "landau", "charge", -1.0),
            mass=_section_float(rc.sections, "landau", "mass", 1.0),
            light_speed=_section_float(rc.sections, "landau", "light_speed", 1.0),
            hbar=_section_float(rc.sections, "landau", "hbar", 1.0),
            Lx=args.edge_x,
            Ly=args.edge_y,
        )
    return LandauSpec(B=args.field, Lx=args.edge_x, Ly=args.edge_y)


# ---------------------------------------------------------------------------
# command handlers


def _emit(rc: RunConfig, group: str, command: str, checks, tables, info=()) -> int:
    """Print the report, write the tables, and return the exit code.

    ``tables`` maps file names to (header, rows) pairs. Files are written
    only after every computation succeeded, so argument errors never leave
    partial output behind.
    """
    print(f"boxmode {group} {command}")
    print(f"config: units={rc.units} digits={rc.digits} out={rc.out}")
    for line in info:
        print(line)
    for result in checks:
        print(result.line(rc.digits))
    rc.out.mkdir(parents=True, exist_ok=True)
    for name, (header, rows) in tables.items():
        path = write_csv(rc.out / name, header, rows, digits=rc.digits)
        print(f"wrote: {path}")
    return 0 if all_passed(checks) else 1


def cmd_well_energies(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    if args.n_max < 1:
        raise ConfigError(f"--n-max must be at least 1, got {args.n_max}")
    levels = range(1, args.n_max + 1)
    energies = [spec.energy(n) for n in levels]
    ratio_defect = max(
        abs(e / (n * n * energies[0]) - 1.0) for n, e in zip(levels, energies)
    )
    diffs = np.diff(energies)
    monotone_defect = float(max(0.0, -diffs.min())) if diffs.size else 0.0
    checks = [
        check("energies-increasing", monotone_defect, 0.0),
        check("quadratic-ladder", ratio_defect, 1e-12),
    ]
    rows = [(n, e) for n, e in zip(levels, energies)]
    return _emit(rc, "well", "energies", checks, {"well_energies.csv": (("n", "energy"), rows)})


def cmd_well_eigenfunction(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    if args.samples < 9 or args.samples % 2 == 0:
        raise ConfigError(f"--samples must be an odd integer >= 9, got {args.samples}")
    psi = Eigenfunction(spec, args.n)
    x = np.linspace(-spec.half_width, spec.half_width, args.samples)
    values = psi(x)
    norm_defect = abs(float(np.trapezoid(values**2, x)) - 1.0)
    parity_defect = float(np.abs(values - psi.parity * values[::-1]).max())
    boundary = max(abs(values[0]), abs(values[-1]))
    checks = [
        check("trapezoid-normalization", norm_defect, 1e-9),
        check("parity-symmetry", parity_defect, 1e-13),
        check("vanishes-at-walls", boundary, 0.0),
    ]
    rows = list(zip(x, values))
    return _emit(
        rc,
        "well",
        "eigenfunction",
        checks,
        {"well_eigenfunction.csv": (("x", "psi"), rows)},
    )


def cmd_momentum_continuous(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    if args.p_max is None and args.count == 4001:
        grid = default_grid(spec, args.n)
    else:
        p_max = args.p_max
        if p_max is None:
            p_max = default_grid(spec, args.n).p_max
        grid = MomentumGrid(p_max=p_max, count=args.count)
    spec_n = spectrum(spec, args.n, grid=grid)
    closed_form = analytic_density(spec, args.n, grid.points)
    density_defect = float(np.abs(spec_n.density - closed_form).max())
    integral = spec_n.norm_trapezoid()
    # Real states transform with amplitude(-p) = conj(amplitude(p)).
    amp = spec_n.amplitude
    hermitian_defect = float(np.abs(amp[::-1] - np.conj(amp)).max())
    checks = [
        check("density-matches-closed-form", density_defect, 1e-10),
        CheckResult(
            "trapezoid-normalization",
            0.999 <= integral <= 1.0 + 1e-9,
            integral - 1.0,
        ),
        check("hermitian-symmetry", hermitian_defect, 1e-12),
    ]
    rows = list(zip(grid.points, spec_n.density))
    return _emit(
        rc,
        "momentum",
        "continuous",
        checks,
        {"momentum_continuous.csv": (("p", "probability_density"), rows)},
    )


def cmd_momentum_discrete(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    if args.k_max < 1:
        raise ConfigError(f"--k-max must be at least 1, got {args.k_max}")
    phase = matched_phase(args.n)
    decomposition = expand(spec, Eigenfunction(spec, args.n), phase, args.k_max)
    exact = eigenstate_spectrum(spec, args.n)
    spike_indices = set(exact.indices.tolist())
    spike_defect = 0.0
    off_spike = 0.0
    for k, _, weight in decomposition.entries:
        if k in spike_indices:
            spike_defect = max(spike_defect, abs(weight - 0.5))
        else:
            off_spike = max(off_spike, weight)
    checks = [
        check("completeness-defect", decomposition.completeness_defect(), 1e-8),
        check("spike-weights-half", spike_defect, 1e-12),
        check("off-spike-weights", off_spike, 1e-12),
    ]
    rows = decomposition.entries
    return _emit(
        rc,
        "momentum",
        "discrete",
        checks,
        {"momentum_discrete.csv": (("k", "momentum", "weight"), rows)},
    )


def cmd_momentum_compare(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    continuous = spectrum(spec, args.n)
    spikes = eigenstate_spectrum(spec, args.n)
    report = convergence_report(spec, args.n, window_half_width=args.window)
    info = [
        f"window half-width {report.window_half_width:.{rc.digits}e}: "
        f"continuous mass {report.mass_in_window:.{rc.digits}e}, "
        f"defect {report.defect:.{rc.digits}e}"
    ]
    checks = [
        check("spike-weight-total", spikes.total_weight() - 1.0, 1e-12),
        CheckResult(
            "window-mass-bounded",
            0.0 < report.mass_in_window < 1.0,
            report.mass_in_window,
        ),
    ]
    rows = list(zip(continuous.grid.points, continuous.density))
    spike_rows = [(momentum, weight) for _, momentum, weight in spikes.entries]
    return _emit(
        rc,
        "momentum",
        "compare",
        checks,
        {
            "momentum_compare.csv": (("p", "continuous_density"), rows),
            "momentum_compare_spikes.csv": (("momentum", "weight"), spike_rows),
        },
        info=info,
    )


def cmd_release_evolve(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    if (args.box_length is None) != (args.samples is None):
        raise ConfigError("--box-length and --samples must be given together")
    box = None
    if args.box_length is not None:
        box = (args.box_length, args.samples)
    snapshot = evolve_free(spec, args.n, args.t, box=box)
    reference = evolve_free(spec, args.n, 0.0, box=(snapshot.box_length, snapshot.x.size))
    energy_drift = abs(
        grid_kinetic_energy(snapshot, spec) / grid_kinetic_energy(reference, spec) - 1.0
    )
    edge = max(snapshot.density[0], snapshot.density[-1])
    checks = [
        check("norm-conservation", snapshot.norm() - 1.0, 1e-9),
        check("energy-conservation", energy_drift, 1e-9),
        check("edge-density", edge, 1e-10 / spec.half_width),
    ]
    rows = list(zip(snapshot.x, snapshot.psi.real, snapshot.psi.imag, snapshot.density))
    return _emit(
        rc,
        "release",
        "evolve",
        checks,
        {"release_evolve.csv": (("x", "psi_re", "psi_im", "density"), rows)},
    )


def cmd_release_farfield(args, rc: RunConfig) -> int:
    spec = _well_spec(rc)
    if args.t <= 0:
        raise ConfigError(f"--t must be positive for the far field, got {args.t}")
    probe = args.probe_max
    if probe is None:
        probe = 6.0 * spec.spike_momentum(args.n)
    box = farfield_box(spec, args.n, args.t, probe_max=probe)
    snapshot = evolve_free(spec, args.n, args.t, box=box)
    curve = farfield_map(snapshot, spec)
    window = np.abs(curve.p) <= probe
    p_window = curve.p[window]
    density_window = curve.density[window]
    deviation = float(
        np.abs(density_window - analytic_density(spec, args.n, p_window)).max()
    )
    stride = max(1, p_window.size // 2001)
    rows = list(zip(p_window[::stride], density_window[::stride]))
    checks = [check("farfield-deviation", deviation, 1e-3)]
    return _emit(
        rc,
        "release",
        "farfield",
        checks,
        {"release_farfield.csv": (("p", "rescaled_density"), rows)},
    )


def _landau_support_grid(spec: LandauSpec, y_guide: float, refine: int = 1):
    step = spec.magnetic_length / (8.0 * refine)
    x = _axis(0.0, 4.0 * spec.magnetic_length, step)
    y = y_guide + _centered_axis(8.0 * spec.magnetic_length, step)
    return x, y


def cmd_landau_state(args, rc: RunConfig) -> int:
    spec = _landau_spec(rc, args)
    energy = level_energy(spec, args.level)
    if args.gauge == "landau":
        p_x = args.p_x
        if p_x is None:
            p_x = 0.5 * spec.hbar / spec.magnetic_length
        state = landau_gauge_state(spec, args.level, p_x)
        y_guide = -spec.light_speed * p_x / (spec.charge * spec.B)
        probe = landau_gauge_state(
            spec, args.level, p_x, grid=_landau_support_grid(spec, y_guide)
        )
        residual = hamiltonian_residual(spec, landau_gauge(spec.B), probe, energy)
    else:
        state = symmetric_gauge_state(spec, args.level, args.angular)
        residual = hamiltonian_residual(spec, symmetric_gauge(spec.B), state, energy)
    checks = [
        check("norm-defect", state.norm() - 1.0, 1e-10),
        check("eigenvalue-residual", residual, 1e-3),
    ]
    X, Y = state.meshes()
    rows = list(
        zip(
            X.ravel(),
            Y.ravel(),
            state.values.real.ravel(),
            state.values.imag.ravel(),
            state.density.ravel(),
        )
    )
    return _emit(
        rc,
        "landau",
        "state",
        checks,
        {"landau_state.csv": (("x", "y", "psi_re", "psi_im", "density"), rows)},
    )


def cmd_landau_degeneracy(args, rc: RunConfig) -> int:
    spec = _landau_spec(rc, args)
    report = degeneracy(spec)
    checks = [
        CheckResult(
            "counts-within-one",
            report.spread <= 1,
            float(report.spread),
        )
    ]
    rows = [
        ("flux_ratio", report.ratio),
        ("flux_count", report.flux_count),
        ("guiding_centers", report.guiding_center_count),
        ("rings", report.ring_count),
    ]
    return _emit(
        rc,
        "landau",
        "degeneracy",
        checks,
        {"landau_degeneracy.csv": (("method", "value"), rows)},
    )


def cmd_landau_hall(args, rc: RunConfig) -> int:
    spec = _landau_spec(rc, args)
    if args.voltage == 0:
        raise ConfigError("--voltage must be nonzero")
    report = hall_current(spec, args.voltage)
    quantum = conductance_quantum(spec)
    quantization_defect = abs(report.conductance / quantum - 1.0)
    checks = [check("conductance-quantization", quantization_defect, 1e-12)]
    rows = [
        ("per_electron_current", report.per_electron_current),
        ("per_level_current", report.per_level_current),
        ("conductance", report.conductance),
        ("conductance_quantum", quantum),
    ]
    return _emit(
        rc,
        "landau",
        "hall",
        checks,
        {"landau_hall.csv": (("quantity", "value"), rows)},
    )


def cmd_landau_checks(args, rc: RunConfig) -> int:
    spec = _landau_spec(rc, args)
    gauge_l = landau_gauge(spec.B)
    gauge_s = symmetric_gauge(spec.B)
    p_probe = 0.5 * spec.hbar / spec.magnetic_length
    y_guide = -spec.light_speed * p_probe / (spec.charge * spec.B)

    checks: list[CheckResult] = []
    for level in (0, 1):
        state = landau_gauge_state(
            spec, level, p_probe, grid=_landau_support_grid(spec, y_guide)
        )
        residual = hamiltonian_residual(spec, gauge_l, state, level_energy(spec, level))
        checks.append(check(f"landau-gauge-level-{level}", residual, 1e-3))
    for angular in (0, 1, 2):
        state = symmetric_gauge_state(spec, 0, angular)
        residual = hamiltonian_residual(spec, gauge_s, state, level_energy(spec, 0))
        checks.append(check(f"symmetric-gauge-ring-{angular}", residual, 1e-3))

    coarse = landau_gauge_state(spec, 0, p_probe, grid=_landau_support_grid(spec, y_guide))
    fine = landau_gauge_state(
        spec, 0, p_probe, grid=_landau_support_grid(spec, y_guide, refine=2)
    )
    r_coarse = hamiltonian_residual(spec, gauge_l, coarse, level_energy(spec, 0))
    r_fine = hamiltonian_residual(spec, gauge_l, fine, level_energy(spec, 0))
    ratio = r_coarse / r_fine if r_fine > 0 else np.inf
    checks.append(CheckResult("refinement-drop-at-least-4x", ratio >= 4.0, float(ratio)))

    probe_state = gaussian_test_state(spec)
    checks.append(check("commutator-landau-gauge", commutator_check(spec, gauge_l, probe_state), 1e-3))
    checks.append(check("commutator-symmetric-gauge", commutator_check(spec, gauge_s, probe_state), 1e-3))
    checks.append(
        check("commutator-zero-field", commutator_check(spec, landau_gauge(0.0), probe_state), 1e-10)
    )

    rows = [(c.name, c.residual) for c in checks]
    return _emit(
        rc,
        "landau",
        "checks",
        checks,
        {"landau_checks.csv": (("check", "residual"), rows)},
    )


# ---------------------------------------------------------------------------
# parser


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", type=Path, default=None, help="config file path")
    parser.add_argument("--out", type=Path, default=None, help="output directory")
    parser.add_argument("--digits", type=int, default=None, help="CSV/report precision")
    parser.add_argument(
        "--units", choices=("natural", "custom"), default=None, help="unit system"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxmode",
        description="Box states in momentum space, sudden release, Landau levels.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group_parser, name, handler, **kwargs):
        sub = group_parser.add_parser(name, **kwargs)
        _add_common(sub)
        sub.set_defaults(handler=handler)
        return sub

    well = groups.add_parser("well", help="stationary box states")
    well_sub = well.add_subparsers(dest="command", required=True)
    p = leaf(well_sub, "energies", cmd_well_energies, help="level energies table")
    p.add_argument("--n-max", type=int, default=10)
    p = leaf(well_sub, "eigenfunction", cmd_well_eigenfunction, help="sampled eigenfunction")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--samples", type=int, default=801)

    momentum = groups.add_parser("momentum", help="momentum-space content")
    momentum_sub = momentum.add_subparsers(dest="command", required=True)
    p = leaf(momentum_sub, "continuous", cmd_momentum_continuous, help="continuous density")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--p-max", type=float, default=None)
    p.add_argument("--count", type=int, default=4001)
    p = leaf(momentum_sub, "discrete", cmd_momentum_discrete, help="ladder weights")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k-max", type=int, default=64)
    p = leaf(momentum_sub, "compare", cmd_momentum_compare, help="density plus spike sidecar")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--window", type=float, default=None)

    release = groups.add_parser("release", help="free flight after wall removal")
    release_sub = release.add_subparsers(dest="command", required=True)
    p = leaf(release_sub, "evolve", cmd_release_evolve, help="evolved snapshot")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--box-length", type=float, default=None)
    p.add_argument("--samples", type=int, default=None)
    p = leaf(release_sub, "farfield", cmd_release_farfield, help="ballistic momentum map")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--t", type=float, default=50.0)
    p.add_argument("--probe-max", type=float, default=None)

    landau = groups.add_parser("landau", help="Landau levels on a rectangle")
    landau_sub = landau.add_subparsers(dest="command", required=True)

    def landau_leaf(name, handler, **kwargs):
        sub = leaf(landau_sub, name, handler, **kwargs)
        sub.add_argument("--field", type=float, default=1.0)
        sub.add_argument("--edge-x", type=float, default=10.0)
        sub.add_argument("--edge-y", type=float, default=10.0)
        return sub

    p = landau_leaf("state", cmd_landau_state, help="sampled level state")
    p.add_argument("--gauge", choices=("landau", "symmetric"), default="landau")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--p-x", type=float, default=None)
    p.add_argument("--angular", type=int, default=0)
    landau_leaf("degeneracy", cmd_landau_degeneracy, help="three degeneracy counts")
    p = landau_leaf("hall", cmd_landau_hall, help="per-level Hall response")
    p.add_argument("--voltage", type=float, default=1.0)
    landau_leaf("checks", cmd_landau_checks, help="stencil and commutator battery")

    return parser


def _resolve_config(args) -> RunConfig:
    rc = RunConfig()
    if args.config is not None:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        rc = RunConfig.from_text(text)
    units = args.units if args.units is not None else rc.units
    digits = args.digits if args.digits is not None else rc.digits
    out = args.out if args.out is not None else rc.out
    return RunConfig(units=units, digits=digits, out=Path(out), sections=rc.sections)


def run(argv=None) -> int:
    """Parse arguments, dispatch, and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        rc = _resolve_config(args)
        return args.handler(args, rc)
    except (ConfigError, ValueError, AliasingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

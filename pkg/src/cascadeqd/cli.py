"""Command-line front end: steady sweeps, transients, oracle checks, figure presets.

Subcommands
-----------
steady    constrained-solve steady states, one CSV row per sweep point
evolve    time evolution of the master equation, one CSV row per sample
check     engine-vs-closed-form deviations for the current parameter point
figure    reproduce a preset figure's data files (fig3a ... fig10, or `all`)

Parameters come from flags and/or a config file of `key = value` lines
(`#` starts a comment); flags override file values.  `case = ow_zero` derives
omega1 from omega3 via omega1 = omega3*beta/alpha and `case = ow_eq_ou` via
omega1 = omega3*(beta-alpha)/(alpha+beta); supplying omega1 explicitly
alongside a non-custom case is a conflict.

Exit codes: 0 success, 1 numerical failure, 2 usage/config error.  CSV output
uses 12 significant digits, LF line endings and no timestamps, so repeated
runs are bit-identical; sweep points may be evaluated concurrently (--jobs)
without changing the file contents.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .model import (
    BasisKind,
    DensityMatrix,
    SystemParams,
    basis_transform,
    superposition_coeffs,
)
from .generator import full_generator
from .dynamics import (
    DegenerateSteadyStateError,
    IntegrationFailureError,
    IntegratorConfig,
    evolve,
    steady_state,
)
from .observables import ObservableRecord, observables_of, series_observables, variance_normally_ordered, g2 as g2_of
from .oracles import (
    dark_state_rate_check,
    g2_closed_form,
    steady_closed_form,
    transient_closed_form,
    variance_closed_form,
)
from .presets import PRESETS, GRID_POINTS
from . import observables

__all__ = ["ConfigError", "RunConfig", "Sweep", "parse_config", "run_steady", "run_evolve", "run_check", "main"]

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

PARAM_KEYS = ("gamma1", "gamma3", "big_gamma2", "big_gamma3", "omega1", "omega3", "delta", "nbar")
RUN_KEYS = ("case", "init", "tmax", "sample_every", "phi", "out")
INIT_CHOICES = (
    "state_1",
    "state_2",
    "state_3",
    "state_w",
    "state_u",
    "state_b",
    "state_d",
    "maximally_mixed",
)
SWEEPABLE = PARAM_KEYS + ("phi",)

STEADY_COLUMNS = (
    "pop_1",
    "pop_2",
    "pop_3",
    "pop_w",
    "pop_u",
    "pop_b",
    "pop_d",
    "re_rho13",
    "im_rho13",
    "purity",
    "variance_phi",
    "g2",
    "inversion_one",
    "inversion_two",
    "residual",
)
EVOLVE_COLUMNS = (
    "pop_1",
    "pop_2",
    "pop_3",
    "pop_w",
    "pop_u",
    "pop_b",
    "pop_d",
    "re_rho13",
    "im_rho13",
    "purity",
    "variance_phi",
    "g2",
    "intensity",
    "inversion_one",
    "inversion_two",
)

# engine-vs-oracle tolerances for `check`
CHECK_STEADY_TOL = 1e-10
CHECK_DARK_TOL = 1e-8
# transient populations are first order in gamma/omega_u
CHECK_TRANSIENT_TOL_FACTOR = 1.5
CHECK_TRANSIENT_MIN_RATIO = 10.0


class ConfigError(ValueError):
    """Unusable flags or config file; maps to exit code 2."""


@dataclass(frozen=True)
class Sweep:
    variable: str
    start: float
    stop: float
    points: int

    def __post_init__(self):
        if self.variable not in SWEEPABLE:
            raise ConfigError(f"cannot sweep '{self.variable}'; choose one of {', '.join(SWEEPABLE)}")
        if self.points < 2:
            raise ConfigError("sweep needs at least 2 points")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved run: base parameters plus sweep/output settings."""

    params: SystemParams
    case: str
    init: str | tuple[float, float, float]
    tmax: float
    sample_every: float | None
    phi: float
    sweep: Sweep | None
    output_path: str | None
    jobs: int = 1

    def params_at(self, variable: str, value: float) -> tuple[SystemParams, float]:
        """Parameters and phi with `variable` replaced, re-deriving omega1 for the case."""
        phi = self.phi
        raw = {key: getattr(self.params, key) for key in PARAM_KEYS}
        if variable == "phi":
            phi = value
        else:
            raw[variable] = value
        if self.case != "custom" and variable != "phi":
            raw["omega1"] = _derive_omega1(self.case, raw["gamma1"], raw["gamma3"], raw["omega3"])
        try:
            return SystemParams(**raw), phi
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


def _derive_omega1(case: str, gamma1: float, gamma3: float, omega3: float) -> float:
    c = superposition_coeffs(gamma1, gamma3)
    if case == "ow_zero":
        if c.alpha == 0.0:
            raise ConfigError("case ow_zero needs gamma1 > 0 to derive omega1 from omega3")
        return omega3 * c.beta / c.alpha
    if case == "ow_eq_ou":
        return omega3 * (c.beta - c.alpha) / (c.alpha + c.beta)
    raise ConfigError(f"unknown case '{case}'")


def _parse_number(key: str, text: str, line: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"unparsable number for '{key}': {line}") from None


def read_config_file(path: str) -> dict[str, str]:
    """Parse `key = value` lines; unknown keys and malformed lines are errors."""
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value': {raw_line}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in PARAM_KEYS + RUN_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key '{key}': {raw_line}")
        values[key] = value
    return values


def _parse_init(text: str):
    if text in INIT_CHOICES:
        return text
    parts = text.split(",")
    if len(parts) == 3:
        try:
            weights = tuple(float(p) for p in parts)
        except ValueError:
            raise ConfigError(f"unparsable init '{text}'") from None
        if any(w < 0 for w in weights) or sum(weights) <= 0:
            raise ConfigError("init weights must be non-negative with positive sum")
        return weights
    raise ConfigError(
        f"unknown init '{text}'; use one of {', '.join(INIT_CHOICES)} or three diagonal weights 'w2,ww,wu'"
    )


def _parse_sweep(text: str) -> Sweep:
    parts = text.split(":")
    if len(parts) != 4:
        raise ConfigError(f"sweep must be VAR:START:STOP:POINTS, got '{text}'")
    var = parts[0].strip()
    start = _parse_number("sweep start", parts[1], text)
    stop = _parse_number("sweep stop", parts[2], text)
    try:
        points = int(parts[3])
    except ValueError:
        raise ConfigError(f"sweep points must be an integer: {text}") from None
    return Sweep(var, start, stop, points)


def parse_config(argv: list[str], file: str | None = None) -> RunConfig:
    """Resolve flags (overriding an optional config file) into a RunConfig."""
    parser = _flag_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit:
        raise ConfigError(f"unparsable flags: {' '.join(argv)}") from None
    return _resolve(namespace, file if file is not None else namespace.config)


def _flag_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    for key in PARAM_KEYS:
        parser.add_argument(f"--{key}", type=float, default=None)
    parser.add_argument("--case", choices=("ow_zero", "ow_eq_ou", "custom"), default=None)
    parser.add_argument("--init", type=str, default=None)
    parser.add_argument("--tmax", type=float, default=None)
    parser.add_argument("--sample_every", type=float, default=None)
    parser.add_argument("--phi", type=float, default=None)
    parser.add_argument("--out", type=str, default=None)
    parser.add_argument("--config", type=str, default=None)
    parser.add_argument("--sweep", type=str, default=None)
    parser.add_argument("--jobs", type=int, default=1)
    return parser


def _resolve(namespace, config_path: str | None) -> RunConfig:
    file_values = read_config_file(config_path) if config_path else {}

    def pick(key: str, fallback=None):
        flag = getattr(namespace, key, None)
        if flag is not None:
            return flag, "flag"
        if key in file_values:
            return file_values[key], "file"
        return fallback, "default"

    raw: dict[str, float] = {}
    explicit: set[str] = set()
    defaults = {"gamma1": 1.0, "gamma3": 1.0}
    for key in PARAM_KEYS:
        value, source = pick(key, defaults.get(key, 0.0))
        if isinstance(value, str):
            value = _parse_number(key, value, f"{key} = {value}")
        raw[key] = float(value)
        if source != "default":
            explicit.add(key)

    case, _ = pick("case", "custom")
    if case not in ("ow_zero", "ow_eq_ou", "custom"):
        raise ConfigError(f"unknown case '{case}'")
    if case != "custom":
        if "omega1" in explicit:
            raise ConfigError(
                f"conflicting settings: case = {case} derives omega1 from omega3; do not set omega1"
            )
        raw["omega1"] = _derive_omega1(case, raw["gamma1"], raw["gamma3"], raw["omega3"])

    init_text, _ = pick("init", "state_2")
    init = _parse_init(init_text) if isinstance(init_text, str) else init_text

    tmax, _ = pick("tmax", 5.0)
    if isinstance(tmax, str):
        tmax = _parse_number("tmax", tmax, f"tmax = {tmax}")
    sample_every, se_source = pick("sample_every", None)
    if isinstance(sample_every, str):
        sample_every = _parse_number("sample_every", sample_every, f"sample_every = {sample_every}")
    phi, _ = pick("phi", 0.0)
    if isinstance(phi, str):
        phi = _parse_number("phi", phi, f"phi = {phi}")
    out, _ = pick("out", None)

    sweep = _parse_sweep(namespace.sweep) if getattr(namespace, "sweep", None) else None
    if sweep is not None and case != "custom" and sweep.variable == "omega1":
        raise ConfigError(f"conflicting settings: cannot sweep omega1 with case = {case}")

    jobs = max(1, int(getattr(namespace, "jobs", 1)))

    try:
        params = SystemParams(**raw)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if float(tmax) <= 0.0:
        raise ConfigError("tmax must be > 0")

    return RunConfig(
        params=params,
        case=case,
        init=init,
        tmax=float(tmax),
        sample_every=None if sample_every is None else float(sample_every),
        phi=float(phi),
        sweep=sweep,
        output_path=out,
        jobs=jobs,
    )


def initial_state(init, params: SystemParams) -> DensityMatrix:
    """Initial density matrix in the superposition basis {2, w, u}."""
    if isinstance(init, tuple):
        return DensityMatrix.from_diagonal(init, BasisKind.SUPERPOSITION)
    if init == "maximally_mixed":
        return DensityMatrix.maximally_mixed(BasisKind.SUPERPOSITION)
    index_by_name = {"state_2": 0, "state_w": 1, "state_u": 2}
    if init in index_by_name:
        return DensityMatrix.pure(index_by_name[init], BasisKind.SUPERPOSITION)
    if init in ("state_1", "state_3"):
        bare = DensityMatrix.pure(0 if init == "state_1" else 2, BasisKind.BARE)
        return basis_transform(BasisKind.BARE, BasisKind.SUPERPOSITION, params).apply(bare)
    if init in ("state_b", "state_d"):
        bd = DensityMatrix.pure(1 if init == "state_b" else 2, BasisKind.BRIGHT_DARK)
        return basis_transform(BasisKind.BRIGHT_DARK, BasisKind.SUPERPOSITION, params).apply(bd)
    raise ConfigError(f"unknown init '{init}'")


def _fmt(value: float) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return format(value, ".12g")


def _steady_row(record: ObservableRecord, residual: float) -> list[str]:
    pop1, pop2, pop3 = record.populations_bare
    pop_w, pop_u, _ = record.populations_super
    pop_b, pop_d = record.populations_brightdark
    values = (
        pop1,
        pop2,
        pop3,
        pop_w,
        pop_u,
        pop_b,
        pop_d,
        record.coherence13.real,
        record.coherence13.imag,
        record.purity,
        record.variance_phi,
        record.g2,
        record.inversion_one,
        record.inversion_two,
        residual,
    )
    return [_fmt(v) for v in values]


def _evolve_row(record: ObservableRecord) -> list[str]:
    pop1, pop2, pop3 = record.populations_bare
    pop_w, pop_u, _ = record.populations_super
    pop_b, pop_d = record.populations_brightdark
    values = (
        pop1,
        pop2,
        pop3,
        pop_w,
        pop_u,
        pop_b,
        pop_d,
        record.coherence13.real,
        record.coherence13.imag,
        record.purity,
        record.variance_phi,
        record.g2,
        record.intensity,
        record.inversion_one,
        record.inversion_two,
    )
    return [_fmt(v) for v in values]


def run_steady(config: RunConfig, header_note: str = "") -> list[str]:
    """CSV lines (no trailing newline) for a steady run or sweep.

    A degenerate steady state replaces the row with an error-marker comment
    and the run continues.
    """
    if config.sweep is not None:
        x_name = config.sweep.variable
        points = [(float(v), *config.params_at(x_name, float(v))) for v in config.sweep.values()]
    else:
        x_name = "value"
        points = [(0.0, config.params, config.phi)]

    sweeping = config.sweep is not None

    def solve(point):
        value, params, phi = point
        try:
            result = steady_state(full_generator(params, BasisKind.SUPERPOSITION))
        except DegenerateSteadyStateError as exc:
            if not sweeping:
                raise  # single-point runs surface the failure (exit code 1)
            return f"# ERROR {x_name}={_fmt(value)} degenerate steady state (null-space dimension {exc.nullity})"
        record = observables_of(result.state, params, phi)
        return ",".join([_fmt(value)] + _steady_row(record, result.residual))

    lines = [f"# {header_note}"] if header_note else []
    lines.append(",".join((x_name,) + STEADY_COLUMNS))
    lines.extend(_map_ordered(solve, points, config.jobs))
    return lines


def run_evolve(config: RunConfig, header_note: str = "") -> list[str]:
    """CSV lines for a time evolution at the configured parameters."""
    params = config.params
    rho0 = initial_state(config.init, params)
    generator = full_generator(params, BasisKind.SUPERPOSITION)
    sample_every = config.sample_every if config.sample_every is not None else config.tmax / 500.0
    series = evolve(
        generator,
        rho0,
        config.tmax,
        IntegratorConfig.for_params(params),
        sample_every=sample_every,
    )
    lines = [f"# {header_note}"] if header_note else []
    lines.append(",".join(("t",) + EVOLVE_COLUMNS))
    for t, record in series_observables(series, params, config.phi):
        lines.append(",".join([_fmt(t)] + _evolve_row(record)))
    return lines


def _grid_lines(config: RunConfig, note: str) -> list[str]:
    """The (alpha^2, nbar) variance surface: omega_w = 0, omega_u = 5, gamma = 1."""
    omega_u = 5.0
    alpha_sqs = np.linspace(0.0, 1.0, GRID_POINTS)
    nbars = np.linspace(0.0, 1.0, GRID_POINTS)

    def solve(alpha_sq: float) -> list[str]:
        c_alpha = math.sqrt(alpha_sq)
        c_beta = math.sqrt(1.0 - alpha_sq)
        params_base = SystemParams(
            gamma1=alpha_sq if alpha_sq > 0 else 0.0,
            gamma3=1.0 - alpha_sq,
            omega1=c_beta * omega_u,
            omega3=c_alpha * omega_u,
            delta=5.0,
        )
        rows = []
        for nbar in nbars:
            params = replace(params_base, nbar=float(nbar))
            result = steady_state(full_generator(params, BasisKind.SUPERPOSITION))
            variance = variance_normally_ordered(result.state, 0.0, params)
            rows.append(",".join([_fmt(float(alpha_sq)), _fmt(float(nbar)), _fmt(variance)]))
        return rows

    lines = [f"# {note}", "alpha_sq,nbar,variance_phi"]
    for chunk in _map_ordered(solve, list(alpha_sqs), config.jobs):
        lines.extend(chunk)
    return lines


def run_check(config: RunConfig) -> tuple[list[str], bool]:
    """Engine-vs-oracle report rows; second element is True iff no check failed."""
    params = config.params
    rows = [["check", "engine", "oracle", "abs_deviation", "status"]]
    all_ok = True

    def add(name: str, engine: float, oracle: float, tol: float):
        nonlocal all_ok
        dev = abs(engine - oracle)
        ok = dev < tol
        all_ok = all_ok and ok
        rows.append([name, _fmt(engine), _fmt(oracle), _fmt(dev), "pass" if ok else "fail"])

    def skip(name: str, reason: str):
        rows.append([name, "", "", "", f"skipped ({reason})"])

    gamma_free = params.big_gamma2 == 0.0 and params.big_gamma3 == 0.0
    from .model import effective_rabi_pair, omega_w_is_zero

    omega_w, omega_u = effective_rabi_pair(params)
    in_ow_zero = gamma_free and omega_w_is_zero(params)
    drive_scale = max(abs(omega_w), abs(omega_u))
    in_ow_eq_ou = (
        gamma_free and drive_scale > 0.0 and abs(omega_w - omega_u) <= 1e-9 * drive_scale
    )

    if in_ow_zero:
        closed = steady_closed_form(params)
        result = steady_state(full_generator(params, BasisKind.SUPERPOSITION))
        record = observables_of(result.state, params, config.phi)
        add("steady_pop_w", record.populations_super[0], closed.pop_w, CHECK_STEADY_TOL)
        add("steady_pop_u", record.populations_super[1], closed.pop_u, CHECK_STEADY_TOL)
        add("steady_pop_2", record.populations_super[2], closed.pop_2, CHECK_STEADY_TOL)
        add("steady_pop_1", record.populations_bare[0], closed.pop_1, CHECK_STEADY_TOL)
        add("steady_pop_3", record.populations_bare[2], closed.pop_3, CHECK_STEADY_TOL)
        add("steady_coherence13", record.coherence13.real, closed.coherence13, CHECK_STEADY_TOL)
        add("steady_purity", record.purity, closed.purity, CHECK_STEADY_TOL)
        add(
            "steady_variance",
            record.variance_phi,
            variance_closed_form(params, config.phi),
            CHECK_STEADY_TOL,
        )
        add("steady_g2", record.g2, g2_closed_form(params), CHECK_STEADY_TOL)
    else:
        reason = "requires omega_w = 0 and big_gamma2 = big_gamma3 = 0"
        for name in (
            "steady_pop_w",
            "steady_pop_u",
            "steady_pop_2",
            "steady_pop_1",
            "steady_pop_3",
            "steady_coherence13",
            "steady_purity",
            "steady_variance",
            "steady_g2",
        ):
            skip(name, reason)

    if in_ow_zero and omega_u >= CHECK_TRANSIENT_MIN_RATIO * params.gamma:
        # populations only: the printed coherence formula carries a known
        # amplitude inconsistency, reported below instead of gated
        check_params = replace(params, delta=0.0)
        generator = full_generator(check_params, BasisKind.SUPERPOSITION)
        rho0 = DensityMatrix.pure(0, BasisKind.SUPERPOSITION)
        tmax = 5.0 / check_params.gamma
        sample_every = (math.pi / omega_u) / 50.0
        series = evolve(
            generator,
            rho0,
            tmax,
            IntegratorConfig.for_params(check_params, rel_tol=1e-10, abs_tol=1e-12),
            sample_every=sample_every,
        )
        ww, uu, c2u = transient_closed_form(check_params, (1.0, 0.0, 0.0), series.times)
        err_pop = max(
            float(np.max(np.abs(ww - series.populations(1)))),
            float(np.max(np.abs(uu - series.populations(2)))),
        )
        tol = CHECK_TRANSIENT_TOL_FACTOR * check_params.gamma / omega_u
        add("transient_populations_supnorm", err_pop, 0.0, tol)
        err_coh = float(np.max(np.abs(c2u - series.elements(0, 2))))
        rows.append(
            [
                "transient_coherence_supnorm",
                _fmt(err_coh),
                "0",
                _fmt(err_coh),
                "reported (printed first-order coherence amplitude differs; not gated)",
            ]
        )
    else:
        skip("transient_populations_supnorm", "requires omega_w = 0, big_gamma = 0, omega_u >= 10*gamma")

    if in_ow_eq_ou:
        rho_dd = dark_state_rate_check(params)
        if params.nbar == 0.0:
            add("dark_state_pop_d", rho_dd, 1.0, CHECK_DARK_TOL)
        else:
            rows.append(["dark_state_pop_d", _fmt(rho_dd), "", "", "reported (no closed form at nbar > 0)"])
    else:
        skip("dark_state_pop_d", "requires omega_w = omega_u != 0 and big_gamma2 = big_gamma3 = 0")

    return [",".join(row) for row in rows], all_ok


def _map_ordered(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _write_lines(lines: list[str], path: str | None):
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        target = Path(path)
        if target.parent != Path(""):
            target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", newline="\n") as handle:
            handle.write(text)


def run_figure(figure_id: str, out_dir: str, jobs: int = 1) -> list[Path]:
    """Emit every CSV of one preset (or all presets) into `out_dir`."""
    if figure_id == "all":
        written = []
        for key in PRESETS:
            written.extend(run_figure(key, out_dir, jobs))
        return written
    if figure_id not in PRESETS:
        raise ConfigError(f"unknown figure '{figure_id}'; choose from {', '.join(PRESETS)} or 'all'")
    preset = PRESETS[figure_id]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for spec in preset.files:
        sweep = Sweep(*spec.sweep) if spec.sweep else None
        config = RunConfig(
            params=spec.params,
            case="custom",
            init=spec.init or "state_2",
            tmax=spec.tmax or 5.0,
            sample_every=spec.sample_every,
            phi=spec.phi,
            sweep=sweep,
            output_path=str(out / spec.filename),
            jobs=jobs,
        )
        if preset.kind == "steady":
            lines = run_steady(config, header_note=spec.note)
        elif preset.kind == "evolve":
            lines = run_evolve(config, header_note=spec.note)
        elif preset.kind == "grid":
            lines = _grid_lines(config, spec.note)
        else:
            raise ConfigError(f"unknown preset kind '{preset.kind}'")
        _write_lines(lines, config.output_path)
        written.append(out / spec.filename)
    return written


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        _print_usage()
        return EXIT_OK if argv else EXIT_USAGE
    command, rest = argv[0], argv[1:]

    try:
        if command == "figure":
            return _main_figure(rest)
        if command not in ("steady", "evolve", "check"):
            raise ConfigError(f"unknown subcommand '{command}'")
        config = parse_config(rest)
        if command == "steady":
            lines = run_steady(config)
            _write_lines(lines, config.output_path)
            return EXIT_OK
        if command == "evolve":
            try:
                lines = run_evolve(config)
            except IntegrationFailureError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_NUMERICAL
            _write_lines(lines, config.output_path)
            return EXIT_OK
        lines, all_ok = run_check(config)
        _write_lines(lines, config.output_path)
        return EXIT_OK if all_ok else EXIT_NUMERICAL
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateSteadyStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (IntegrationFailureError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def _main_figure(rest: list[str]) -> int:
    parser = argparse.ArgumentParser(prog="cascadeqd figure", add_help=True)
    parser.add_argument("figure_id", help="fig3a, fig4, fig5, fig6, fig7a, fig7b, fig8, fig9a, fig9b, fig10, or all")
    parser.add_argument("--out", default="data", help="output directory for the CSV files")
    parser.add_argument("--jobs", type=int, default=1)
    try:
        namespace = parser.parse_args(rest)
    except SystemExit:
        return EXIT_USAGE
    written = run_figure(namespace.figure_id, namespace.out, max(1, namespace.jobs))
    for path in written:
        print(path)
    return EXIT_OK


def _print_usage():
    print(
        "usage: cascadeqd {steady | evolve | check | figure} [flags]\n"
        "  steady   --sweep VAR:START:STOP:POINTS and parameter flags; CSV to --out\n"
        "  evolve   --tmax T --sample_every DT --init STATE; CSV to --out\n"
        "  check    engine-vs-closed-form report for the configured point\n"
        "  figure   ID --out DIR [--jobs N]; reproduce a preset figure's data\n"
        "flags: --gamma1 --gamma3 --big_gamma2 --big_gamma3 --omega1 --omega3\n"
        "       --delta --nbar --case {ow_zero,ow_eq_ou,custom} --init --tmax\n"
        "       --sample_every --phi --sweep --out --config FILE --jobs N"
    )


if __name__ == "__main__":
    sys.exit(main())

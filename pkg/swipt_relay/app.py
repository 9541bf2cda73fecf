import io
import json
import logging
import sys
from functools import wraps
from typing import List, Optional, Tuple

import click
from click.core import ParameterSource
from pydantic import ValidationError

from swipt_relay.config import load_config_file, setup_logging
from swipt_relay.controllers import optimal_rho
from swipt_relay.exceptions import ArgumentError, SwiptRelayError
from swipt_relay.experiments import (
    PRESETS,
    emit_csv,
    emit_plot_script,
    run_sweep,
    validate,
    write_csv,
)
from swipt_relay.models import (
    REFERENCE_SCENARIO,
    ChannelGains,
    McConfig,
    Metric,
    QuadratureSpec,
    RowMode,
    ScenarioParams,
    Scheme,
    SweepRow,
    SweepSpec,
)
from swipt_relay.models.montecarlo import MAX_SEED
from swipt_relay.utils import parse_quad, parse_snr_grid, split_csv_list

logger = logging.getLogger(__name__)

ENVVAR_PREFIX = "SWIPT_RELAY"
EXIT_VALIDATION_FAILED = 1
EXIT_ARGUMENT = 2


def handle_errors(func):
    """Map toolkit and validation errors to the CLI exit codes.

    Argument and domain errors and pydantic validation errors exit with 2,
    I/O errors with 3. The message goes to stderr, never a traceback.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except ValidationError as e:
            click.echo(f"Error: invalid parameters: {e}", err=True)
            ctx.exit(EXIT_ARGUMENT)
        except SwiptRelayError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(e.exit_code)

    return wrapper


def _load_config(ctx: click.Context, param: click.Parameter, value: Optional[str]):
    if value is None:
        return None
    try:
        values = load_config_file(value)
    except ArgumentError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param) from e
    except SwiptRelayError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(e.exit_code)
    ctx.default_map = {name: dict(values) for name in ctx.command.commands}
    return value


def scenario_options(func):
    """Options describing the physical scenario, shared by every subcommand."""
    options = [
        click.option(
            "--eta",
            type=float,
            default=REFERENCE_SCENARIO["eta"],
            show_default=True,
            help="Energy conversion efficiency, 0 < eta < 1.",
        ),
        click.option(
            "--rth",
            type=float,
            default=REFERENCE_SCENARIO["r_th"],
            show_default=True,
            help="Target rate R_th in bits/s/Hz.",
        ),
    ]
    for i in range(3):
        default_rate = REFERENCE_SCENARIO[f"lambda{i}"]
        options.append(
            click.option(
                f"--lambda{i}",
                type=float,
                default=None,
                help=f"Rate of channel gain {i}  [default: {default_rate:g}]",
            )
        )
        options.append(
            click.option(
                f"--mean-gain{i}",
                type=float,
                default=None,
                help=f"Mean of channel gain {i}, i.e. 1/lambda{i}.",
            )
        )
    for option in reversed(options):
        func = option(func)
    return func


def quadrature_option(func):
    return click.option(
        "--quad",
        default="20,20,20,20,20",
        show_default=True,
        help="Node counts N,M,N1,N2,N3 of the Gauss-Chebyshev rules.",
    )(func)


def montecarlo_options(trials_default: int = 1_000_000):
    def decorator(func):
        func = click.option(
            "--workers",
            "-w",
            type=click.IntRange(min=1),
            default=1,
            show_default=True,
            help="Worker processes; results do not depend on it.",
        )(func)
        func = click.option(
            "--seed",
            type=click.IntRange(0, MAX_SEED),
            default=McConfig().seed,
            show_default=True,
        )(func)
        func = click.option(
            "--trials",
            type=click.IntRange(min=1),
            default=trials_default,
            show_default=True,
            help="Monte Carlo realizations per SNR point.",
        )(func)
        return func

    return decorator


def output_options(func):
    func = click.option(
        "--plot",
        type=click.Path(dir_okay=False),
        default=None,
        help="Write a matplotlib script plotting the rows.",
    )(func)
    func = click.option(
        "--out",
        "-o",
        type=click.Path(dir_okay=False),
        default=None,
        help="CSV output path; stdout when omitted.",
    )(func)
    return func


def _scenario(eta: float, rth: float, **gains: Optional[float]) -> ScenarioParams:
    values = {"eta": eta, "r_th": rth}
    for i in range(3):
        rate, mean = gains.get(f"lambda{i}"), gains.get(f"mean_gain{i}")
        if rate is not None and mean is not None:
            raise ArgumentError(f"Give either --lambda{i} or --mean-gain{i}, not both")
        if mean is not None:
            if mean <= 0:
                raise ArgumentError(f"--mean-gain{i} must be > 0, got {mean}")
            rate = 1.0 / mean
        values[f"lambda{i}"] = rate if rate is not None else REFERENCE_SCENARIO[f"lambda{i}"]
    return ScenarioParams(**values)


def _parse_schemes(text: str) -> List[Scheme]:
    try:
        return [Scheme.parse(item) for item in split_csv_list(text)]
    except ValueError as e:
        raise ArgumentError(f"Invalid scheme list '{text}': {e}") from e


def _parse_enum_list(text: str, enum, option: str) -> list:
    try:
        return [enum(item.lower()) for item in split_csv_list(text)]
    except ValueError as e:
        raise ArgumentError(f"Invalid {option} '{text}': {e}") from e


def _grid_bounds(text: str) -> Tuple[float, float, float]:
    points = parse_snr_grid(text)
    if len(points) == 1:
        return points[0], points[0], 1.0
    start, stop, step = (float(v) for v in text.split(":"))
    return start, stop, step


def _emit(rows: List[SweepRow], out: Optional[str], plot: Optional[str]):
    if out:
        emit_csv(rows, out)
    if plot:
        emit_plot_script(rows, plot, csv_path=out)
    if not out:
        buffer = io.StringIO()
        write_csv(rows, buffer)
        click.echo(buffer.getvalue(), nl=False)


def _run_metric_sweep(metric: Metric, opts: dict):
    start, stop, step = _grid_bounds(opts["snr_db"])
    spec = SweepSpec(
        snr_db_start=start,
        snr_db_stop=stop,
        snr_db_step=step,
        schemes=_parse_schemes(opts["schemes"]),
        metrics=[metric],
        modes=_parse_enum_list(opts["modes"], RowMode, "--modes"),
        params=_scenario(opts["eta"], opts["rth"], **_gain_options(opts)),
        quadrature=QuadratureSpec.from_counts(parse_quad(opts["quad"])),
        mc=McConfig(trials=opts["trials"], seed=opts["seed"], workers=opts["workers"]),
    )
    _emit(run_sweep(spec), opts["out"], opts["plot"])


def _gain_options(opts: dict) -> dict:
    return {
        key: opts[key]
        for i in range(3)
        for key in (f"lambda{i}", f"mean_gain{i}")
    }


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--config",
    "-c",
    type=click.Path(dir_okay=False),
    is_eager=True,
    expose_value=False,
    callback=_load_config,
    help="Flat key = value file supplying option defaults.",
)
@click.option(
    "--log-level",
    "-l",
    default="info",
    show_default=True,
    type=click.Choice(["critical", "error", "warning", "info", "debug"]),
)
def cli(log_level: str):
    """Outage and capacity toolkit for SWIPT decode-and-forward relaying."""
    setup_logging(log_level)


@cli.command()
@click.option("--snr-db", default="10", show_default=True, help="Transmit SNR in dB.")
@click.option("--x", "gain_x", type=float, required=True, help="Direct-link gain |h0|^2.")
@click.option("--y", "gain_y", type=float, required=True, help="Source-relay gain |h1|^2.")
@click.option("--z", "gain_z", type=float, required=True, help="Relay-destination gain |h2|^2.")
@scenario_options
@handle_errors
def rho(
    snr_db: str,
    gain_x: float,
    gain_y: float,
    gain_z: float,
    eta: float,
    rth: float,
    **gains,
):
    """Print the optimal PS factor and end-to-end SNR for one realization."""
    points = parse_snr_grid(snr_db)
    if len(points) != 1:
        raise ArgumentError("rho takes a single --snr-db value")
    params = _scenario(eta, rth, **gains).at_snr_db(points[0])
    decision = optimal_rho(params, ChannelGains(x=gain_x, y=gain_y, z=gain_z))
    click.echo(decision.model_dump_json(indent=2))


@cli.command()
@click.option("--snr-db", default="0:40:5", show_default=True, help="dB grid start:stop:step.")
@click.option("--schemes", default="proposed", show_default=True)
@click.option("--modes", default="exact,approx", show_default=True,
              help="Any of exact, approx, mc.")
@scenario_options
@quadrature_option
@montecarlo_options()
@output_options
@handle_errors
def outage(**opts):
    """Outage probability versus SNR."""
    _run_metric_sweep(Metric.OUTAGE, opts)


@cli.command()
@click.option("--snr-db", default="0:40:5", show_default=True, help="dB grid start:stop:step.")
@click.option("--schemes", default="proposed", show_default=True)
@click.option("--modes", default="approx", show_default=True,
              help="Any of exact, approx, mc.")
@scenario_options
@quadrature_option
@montecarlo_options()
@output_options
@handle_errors
def capacity(**opts):
    """Ergodic capacity versus SNR."""
    _run_metric_sweep(Metric.CAPACITY, opts)


# sweep options a preset may override only when given explicitly
_PRESET_OVERRIDES = ("snr_db", "schemes", "metrics", "modes")


@cli.command()
@click.option("--preset", type=click.Choice(sorted(PRESETS)), default=None,
              help="Start from a named figure setup.")
@click.option("--snr-db", default="0:40:5", show_default=True, help="dB grid start:stop:step.")
@click.option("--schemes", default="proposed,legacy,random,noncoop", show_default=True,
              help="Any of proposed, legacy, legacy-dl, random, noncoop, fixed[:rho].")
@click.option("--metrics", default="outage,capacity", show_default=True)
@click.option("--modes", default="exact,approx,mc", show_default=True)
@scenario_options
@quadrature_option
@montecarlo_options()
@output_options
@handle_errors
def sweep(preset: Optional[str], **opts):
    """Sweep SNR over schemes, metrics and evaluation modes."""
    ctx = click.get_current_context()
    params = _scenario(opts["eta"], opts["rth"], **_gain_options(opts))
    quadrature = QuadratureSpec.from_counts(parse_quad(opts["quad"]))
    mc = McConfig(trials=opts["trials"], seed=opts["seed"], workers=opts["workers"])

    values = {}
    if preset:
        values = PRESETS[preset](params, quadrature, mc).model_dump()
    for name in _PRESET_OVERRIDES:
        if preset and ctx.get_parameter_source(name) is ParameterSource.DEFAULT:
            continue
        if name == "snr_db":
            start, stop, step = _grid_bounds(opts["snr_db"])
            values.update(snr_db_start=start, snr_db_stop=stop, snr_db_step=step)
        elif name == "schemes":
            values["schemes"] = _parse_schemes(opts["schemes"])
        elif name == "metrics":
            values["metrics"] = _parse_enum_list(opts["metrics"], Metric, "--metrics")
        else:
            values["modes"] = _parse_enum_list(opts["modes"], RowMode, "--modes")
    values.update(params=params, quadrature=quadrature, mc=mc)

    _emit(run_sweep(SweepSpec(**values)), opts["out"], opts["plot"])


@cli.command(name="validate")
@scenario_options
@quadrature_option
@montecarlo_options(trials_default=10_000_000)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--corrupt-threshold", is_flag=True,
              help="Negative control: analytic side uses the literal 2^(2R-1) threshold.")
@handle_errors
def validate_command(as_json: bool, corrupt_threshold: bool, **opts):
    """Check closed forms against simulation; exits 1 if any check fails."""
    report = validate(
        params=_scenario(opts["eta"], opts["rth"], **_gain_options(opts)),
        quadrature=QuadratureSpec.from_counts(parse_quad(opts["quad"])),
        mc=McConfig(trials=opts["trials"], seed=opts["seed"], workers=opts["workers"]),
        corrupt_threshold=corrupt_threshold,
    )
    if as_json:
        click.echo(json.dumps(report.model_dump(mode="json"), indent=2))
    else:
        for check in report.checks:
            click.echo(f"{check.status.value.upper():<12} {check.name:<24} {check.detail}")
    if not report.success:
        click.get_current_context().exit(EXIT_VALIDATION_FAILED)


def run(argv: Optional[List[str]] = None):
    cli.main(args=argv, prog_name="swipt-relay", auto_envvar_prefix=ENVVAR_PREFIX)


if __name__ == "__main__":
    run(sys.argv[1:])

import csv
import logging
import runpy

import pytest
from click.testing import CliRunner

from swipt_relay.app import ENVVAR_PREFIX, cli

logger = logging.getLogger(__name__)

pytestmark = pytest.mark.integration


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.mark.parametrize("preset,rows_expected", [("fig1", 54), ("fig2", 54)])
def test_preset_sweep_and_plot(tmp_path, preset, rows_expected):
    """Full preset sweep at 10^6 trials, then render the generated plot script."""
    out = tmp_path / f"{preset}.csv"
    plot = tmp_path / f"{preset}_plot.py"
    result = CliRunner().invoke(
        cli,
        [
            "-l",
            "warning",
            "sweep",
            "--preset",
            preset,
            "--trials",
            "1000000",
            "-w",
            "4",
            "-o",
            str(out),
            "--plot",
            str(plot),
        ],
        auto_envvar_prefix=ENVVAR_PREFIX,
    )
    assert result.exit_code == 0, result.output

    with open(out, newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    logger.info(f"{preset}: {len(rows)} rows")
    assert len(rows) == rows_expected

    pytest.importorskip("matplotlib")
    runpy.run_path(str(plot), run_name="__main__")
    assert (tmp_path / f"{preset}_plot.png").stat().st_size > 0


def test_validate_command_at_acceptance_scale():
    result = CliRunner().invoke(
        cli,
        ["-l", "warning", "validate", "-w", "4"],
        auto_envvar_prefix=ENVVAR_PREFIX,
    )
    logger.info(result.output)
    assert result.exit_code == 0
    assert "FAIL" not in result.stdout

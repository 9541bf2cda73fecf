"""Unit tests for configuration parsing, logging setup and small utilities."""

import logging

import pytest

from swipt_relay.config import CONFIG_KEYS, load_config_file, setup_logging
from swipt_relay.exceptions import ArgumentError, OutputError
from swipt_relay.utils import (
    db_to_linear,
    linear_to_db,
    parse_quad,
    parse_snr_grid,
    split_csv_list,
)

logger = logging.getLogger(__name__)


def test_load_config_file(tmp_path):
    path = tmp_path / "relay.conf"
    path.write_text(
        "# reference scenario with fewer trials\n"
        "\n"
        "trials = 5000\n"
        "mean-gain1 = 4   # dashes are accepted\n"
        "schemes = proposed, noncoop\n"
    )
    assert load_config_file(path) == {
        "trials": "5000",
        "mean_gain1": "4",
        "schemes": "proposed, noncoop",
    }


def test_load_config_file_rejects_unknown_key(tmp_path):
    path = tmp_path / "relay.conf"
    path.write_text("gamma = 3\n")
    with pytest.raises(ArgumentError, match="unknown key"):
        load_config_file(path)


def test_load_config_file_rejects_malformed_line(tmp_path):
    path = tmp_path / "relay.conf"
    path.write_text("trials 5000\n")
    with pytest.raises(ArgumentError, match="relay.conf:1"):
        load_config_file(path)


def test_load_config_file_missing(tmp_path):
    with pytest.raises(OutputError):
        load_config_file(tmp_path / "absent.conf")


def test_config_keys_cover_cli_options():
    assert {"snr_db", "trials", "seed", "workers", "quad", "preset"} <= CONFIG_KEYS


def test_setup_logging_sets_root_level():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    try:
        setup_logging("debug")
        assert root.level == logging.DEBUG
        assert logging.getLogger("matplotlib").level == logging.WARNING
    finally:
        root.handlers[:] = handlers
        root.setLevel(level)


def test_db_conversions():
    assert db_to_linear(20.0) == pytest.approx(100.0)
    assert linear_to_db(1000.0) == pytest.approx(30.0)


def test_parse_snr_grid():
    assert parse_snr_grid("0:40:5") == [0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0]
    assert parse_snr_grid("12.5") == [12.5]
    assert parse_snr_grid("0:1:0.1")[-1] == 1.0
    assert len(parse_snr_grid("0:1:0.1")) == 11
    assert parse_snr_grid("0:7:5") == [0.0, 5.0]


@pytest.mark.parametrize("text", ["0:40", "a:b:c", "0:40:0", "10:0:5", "0:40:-5"])
def test_parse_snr_grid_rejects_malformed(text):
    with pytest.raises(ArgumentError):
        parse_snr_grid(text)


def test_parse_quad():
    assert parse_quad("20,20,20,20,20") == (20, 20, 20, 20, 20)
    with pytest.raises(ArgumentError):
        parse_quad("20,20")
    with pytest.raises(ArgumentError):
        parse_quad("20,x,20,20,20")


def test_split_csv_list():
    assert split_csv_list(" proposed, ,noncoop ") == ["proposed", "noncoop"]

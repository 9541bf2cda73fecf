import logging

import pytest

from swipt_relay.models import (
    ChannelGains,
    McConfig,
    QuadratureSpec,
    ScenarioParams,
    SystemParams,
)

logger = logging.getLogger(__name__)


@pytest.fixture(scope="session")
def scenario() -> ScenarioParams:
    """Reference scenario: eta=0.5, mean gains 1, 5, 5, R_th=1."""
    return ScenarioParams()


@pytest.fixture
def params_10db(scenario: ScenarioParams) -> SystemParams:
    return scenario.at_snr_db(10.0)


@pytest.fixture
def simple_params() -> SystemParams:
    """gamma_in = 10, eta = 0.5 with unit rates; used by the hand-computed examples."""
    return SystemParams(
        gamma_in=10.0, eta=0.5, lambda0=1.0, lambda1=1.0, lambda2=1.0, r_th=1.0
    )


@pytest.fixture
def gains_123() -> ChannelGains:
    return ChannelGains(x=1.0, y=2.0, z=3.0)


@pytest.fixture(scope="session")
def quadrature() -> QuadratureSpec:
    return QuadratureSpec()


@pytest.fixture
def small_mc() -> McConfig:
    """Cheap Monte Carlo config for unit tests; two blocks so block merging is exercised."""
    return McConfig(trials=40_000, seed=7, workers=1, block_size=20_000)


@pytest.fixture
def tmp_csv(tmp_path):
    return tmp_path / "rows.csv"

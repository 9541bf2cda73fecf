"""Pydantic models for SNR sweeps and validation reports."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from swipt_relay.utils import snr_grid

from .analytic import QuadratureSpec
from .base import BaseReport
from .montecarlo import McConfig
from .system import REFERENCE_SCENARIO, Scheme, SystemParams


class Metric(str, Enum):
    OUTAGE = "outage"
    CAPACITY = "capacity"


class RowMode(str, Enum):
    """Provenance of a sweep value."""

    EXACT = "exact"
    APPROX = "approx"
    MC = "mc"


class ScenarioParams(BaseModel):
    """System parameters without the transmit SNR, which the sweep supplies."""

    model_config = ConfigDict(frozen=True)

    eta: float = Field(default=REFERENCE_SCENARIO["eta"], gt=0, lt=1)
    lambda0: float = Field(default=REFERENCE_SCENARIO["lambda0"], gt=0, allow_inf_nan=False)
    lambda1: float = Field(default=REFERENCE_SCENARIO["lambda1"], gt=0, allow_inf_nan=False)
    lambda2: float = Field(default=REFERENCE_SCENARIO["lambda2"], gt=0, allow_inf_nan=False)
    r_th: float = Field(default=REFERENCE_SCENARIO["r_th"], gt=0, allow_inf_nan=False)

    def at_snr_db(self, snr_db: float) -> SystemParams:
        return SystemParams.from_db(snr_db, **self.model_dump())


class SweepSpec(BaseModel):
    """Everything a sweep needs: grid, schemes, metrics, modes and engine settings."""

    model_config = ConfigDict(frozen=True)

    snr_db_start: float = Field(default=0.0, allow_inf_nan=False)
    snr_db_stop: float = Field(default=40.0, allow_inf_nan=False)
    snr_db_step: float = Field(default=5.0, gt=0, allow_inf_nan=False)
    schemes: List[Scheme] = Field(min_length=1)
    metrics: List[Metric] = Field(min_length=1)
    modes: List[RowMode] = Field(min_length=1)
    params: ScenarioParams = Field(default_factory=ScenarioParams)
    quadrature: QuadratureSpec = Field(default_factory=QuadratureSpec)
    mc: McConfig = Field(default_factory=McConfig)

    @model_validator(mode="after")
    def _check_grid(self) -> "SweepSpec":
        if self.snr_db_stop < self.snr_db_start:
            raise ValueError("snr_db_stop must be >= snr_db_start")
        return self

    @property
    def snr_points(self) -> List[float]:
        return snr_grid(self.snr_db_start, self.snr_db_stop, self.snr_db_step)


class SweepRow(BaseModel):
    """One (SNR point, scheme, metric, mode) result."""

    model_config = ConfigDict(frozen=True)

    snr_db: float
    scheme: str = Field(description="Scheme label, e.g. 'proposed' or 'fixed:0.5'")
    metric: Metric
    mode: RowMode
    value: float
    std_err: Optional[float] = Field(None, description="Standard error; empty for analytic rows")


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INSUFFICIENT = "insufficient"


class CheckResult(BaseModel):
    """Outcome of one validation check."""

    name: str = Field(description="Short identifier of the check")
    status: CheckStatus
    detail: str = Field(default="", description="Human-readable explanation")
    measured: Optional[float] = Field(None, description="Worst measured quantity")
    threshold: Optional[float] = Field(None, description="Bound the quantity is held to")


class ValidationReport(BaseReport):
    """Machine-readable result of the validation suite."""

    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def insufficient(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.INSUFFICIENT]

"""Pydantic models for the physical scenario and power-splitting decisions."""

import math
from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from swipt_relay.utils import db_to_linear, linear_to_db

# Reference scenario shared by the fig1/fig2 presets and the validation suite.
REFERENCE_SCENARIO = {
    "eta": 0.5,
    "lambda0": 1.0,
    "lambda1": 0.2,
    "lambda2": 0.2,
    "r_th": 1.0,
}


class SystemParams(BaseModel):
    """Model for the physical scenario of one S-R-D link with a direct path."""

    model_config = ConfigDict(frozen=True)

    gamma_in: float = Field(
        gt=0, allow_inf_nan=False, description="Transmit SNR P_s/sigma^2 (linear)"
    )
    eta: float = Field(gt=0, lt=1, description="Energy conversion efficiency")
    lambda0: float = Field(
        gt=0, allow_inf_nan=False, description="Rate of |h0|^2 (S->D), mean 1/lambda0"
    )
    lambda1: float = Field(
        gt=0, allow_inf_nan=False, description="Rate of |h1|^2 (S->R), mean 1/lambda1"
    )
    lambda2: float = Field(
        gt=0, allow_inf_nan=False, description="Rate of |h2|^2 (R->D), mean 1/lambda2"
    )
    r_th: float = Field(
        gt=0, allow_inf_nan=False, description="Target data rate in bits/s/Hz"
    )
    threshold_rule: Literal["rate", "literal"] = Field(
        default="rate",
        description=(
            "'rate' gives gamma_th = 2^(2 R_th) - 1; 'literal' gives 2^(2 R_th - 1) "
            "and only exists as a negative control"
        ),
    )

    @property
    def gamma_th(self) -> float:
        """SNR threshold below which the link is in outage."""
        if self.threshold_rule == "literal":
            return 2.0 ** (2.0 * self.r_th - 1.0)
        return math.expm1(2.0 * self.r_th * math.log(2.0))

    @property
    def a(self) -> float:
        """Threshold ratio gamma_th / gamma_in."""
        return self.gamma_th / self.gamma_in

    @property
    def snr_db(self) -> float:
        return linear_to_db(self.gamma_in)

    @classmethod
    def from_db(cls, snr_db: float, **kwargs) -> "SystemParams":
        """Build parameters from a transmit SNR in dB; missing fields use the reference scenario."""
        values = {**REFERENCE_SCENARIO, **kwargs}
        return cls(gamma_in=db_to_linear(snr_db), **values)

    def with_snr_db(self, snr_db: float) -> "SystemParams":
        return self.with_gamma_in(db_to_linear(snr_db))

    def with_gamma_in(self, gamma_in: float) -> "SystemParams":
        return SystemParams(**{**self.model_dump(), "gamma_in": gamma_in})


class ChannelGains(BaseModel):
    """Model for one quasi-static fading realization (channel power gains)."""

    model_config = ConfigDict(frozen=True)

    x: float = Field(ge=0, allow_inf_nan=False, description="|h0|^2, direct link")
    y: float = Field(ge=0, allow_inf_nan=False, description="|h1|^2, source-relay")
    z: float = Field(ge=0, allow_inf_nan=False, description="|h2|^2, relay-destination")


class SchemeKind(str, Enum):
    PROPOSED = "proposed"
    LEGACY = "legacy"
    LEGACY_DL = "legacy-dl"
    RANDOM = "random"
    NONCOOP = "noncoop"
    FIXED = "fixed"


DEFAULT_FIXED_RHO = 0.5


class Scheme(BaseModel):
    """Model for a power-splitting policy under evaluation.

    Only ``fixed`` carries a payload (its constant PS factor).
    """

    model_config = ConfigDict(frozen=True)

    kind: SchemeKind = Field(description="Power-splitting policy")
    rho: Optional[float] = Field(
        None, ge=0, le=1, description="Constant PS factor of the fixed scheme"
    )

    @model_validator(mode="after")
    def _check_payload(self) -> "Scheme":
        if self.kind is SchemeKind.FIXED and self.rho is None:
            raise ValueError("fixed scheme requires rho in [0, 1]")
        if self.kind is not SchemeKind.FIXED and self.rho is not None:
            raise ValueError(f"scheme '{self.kind.value}' takes no rho")
        return self

    @classmethod
    def proposed_dpss(cls) -> "Scheme":
        return cls(kind=SchemeKind.PROPOSED)

    @classmethod
    def legacy_dpss(cls) -> "Scheme":
        return cls(kind=SchemeKind.LEGACY)

    @classmethod
    def legacy_dpss_dl(cls) -> "Scheme":
        return cls(kind=SchemeKind.LEGACY_DL)

    @classmethod
    def random_ps(cls) -> "Scheme":
        return cls(kind=SchemeKind.RANDOM)

    @classmethod
    def non_cooperative(cls) -> "Scheme":
        return cls(kind=SchemeKind.NONCOOP)

    @classmethod
    def fixed_ps(cls, rho: float = DEFAULT_FIXED_RHO) -> "Scheme":
        return cls(kind=SchemeKind.FIXED, rho=rho)

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        """Parse ``proposed``, ``legacy``, ``legacy-dl``, ``random``, ``noncoop`` or ``fixed[:rho]``."""
        name, _, payload = text.strip().lower().partition(":")
        kind = SchemeKind(name)
        if kind is SchemeKind.FIXED:
            return cls.fixed_ps(float(payload) if payload else DEFAULT_FIXED_RHO)
        if payload:
            raise ValueError(f"scheme '{name}' takes no parameter")
        return cls(kind=kind)

    @property
    def label(self) -> str:
        if self.kind is SchemeKind.FIXED:
            return f"fixed:{self.rho:g}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label


class PsDecision(BaseModel):
    """Model for the optimal PS decision of one realization."""

    model_config = ConfigDict(frozen=True)

    rho: float = Field(ge=0, le=1, description="Chosen power-splitting factor")
    gamma_end: float = Field(ge=0, description="Resulting end-to-end SNR (linear)")
    used_relay: bool = Field(description="Whether the relay path contributes")

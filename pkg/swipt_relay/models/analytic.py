"""Pydantic models for the closed-form evaluators."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class EvalMode(str, Enum):
    """Exact integrates the Bessel form numerically; Approx uses the high-SNR closed form."""

    EXACT = "exact"
    APPROX = "approx"


class ChebyshevRule(BaseModel):
    """N-point Gauss-Chebyshev rule: nodes cos((2i-1)pi/2N) and the common weight pi/N."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of nodes")
    nodes: tuple[float, ...] = Field(description="Nodes f_i, strictly decreasing")
    weight: float = Field(gt=0, description="Common weight pi/N")


class QuadratureSpec(BaseModel):
    """Node counts of every Gauss-Chebyshev rule used by the analytic module."""

    model_config = ConfigDict(frozen=True)

    n_outage: int = Field(default=20, ge=1, description="N of the outage log integral")
    m_cap: int = Field(default=20, ge=1, description="M of the C1 rule")
    n1: int = Field(default=20, ge=1, description="N1 of the C2 rule (x)")
    n2: int = Field(default=20, ge=1, description="N2 of the C2 rule (y)")
    n3: int = Field(default=20, ge=1, description="N3 of the C2 rule (z)")

    @classmethod
    def from_counts(cls, counts: tuple[int, int, int, int, int]) -> "QuadratureSpec":
        n_outage, m_cap, n1, n2, n3 = counts
        return cls(n_outage=n_outage, m_cap=m_cap, n1=n1, n2=n2, n3=n3)

    def scaled(self, factor: int) -> "QuadratureSpec":
        return QuadratureSpec(
            n_outage=self.n_outage * factor,
            m_cap=self.m_cap * factor,
            n1=self.n1 * factor,
            n2=self.n2 * factor,
            n3=self.n3 * factor,
        )


class OutageTerms(BaseModel):
    """All partial terms of the analytic outage probability."""

    model_config = ConfigDict(frozen=True)

    mode: EvalMode
    a: float = Field(gt=0, description="Threshold ratio gamma_th/gamma_in")
    p1: float = Field(ge=0, le=1, description="P(gamma_in x < gamma_th, y < x)")
    p21: float = Field(ge=0, le=1, description="P(0 < x < y < a)")
    p221: float = Field(ge=0, le=1, description="(1 - e^{-lambda0 a}) e^{-lambda1 a}")
    p222: float = Field(description="Bessel-kernel double integral")
    p22: float = Field(description="p221 - lambda0 lambda1 p222")
    phi_out: float = Field(description="Coefficient of the ln(lambda1 lambda2/eta) term")
    lambda_cap: float = Field(description="Coefficient of the x ln x term")
    raw_total: float = Field(description="Unclamped p1 + p21 + p22")
    total: float = Field(ge=0, le=1, description="Outage probability clamped to [0, 1]")

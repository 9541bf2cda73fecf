"""Pydantic models for parameters, estimates and reports."""

# Base models
from .base import BaseReport

# Scenario models
from .system import (
    REFERENCE_SCENARIO,
    ChannelGains,
    PsDecision,
    Scheme,
    SchemeKind,
    SystemParams,
)

# Analytic models
from .analytic import (
    ChebyshevRule,
    EvalMode,
    OutageTerms,
    QuadratureSpec,
)

# Monte Carlo models
from .montecarlo import (
    McConfig,
    McEstimate,
)

# Sweep models
from .sweep import (
    CheckResult,
    CheckStatus,
    Metric,
    RowMode,
    ScenarioParams,
    SweepRow,
    SweepSpec,
    ValidationReport,
)

__all__ = [
    # Base models
    "BaseReport",
    # Scenario models
    "REFERENCE_SCENARIO",
    "ChannelGains",
    "PsDecision",
    "Scheme",
    "SchemeKind",
    "SystemParams",
    # Analytic models
    "ChebyshevRule",
    "EvalMode",
    "OutageTerms",
    "QuadratureSpec",
    # Monte Carlo models
    "McConfig",
    "McEstimate",
    # Sweep models
    "CheckResult",
    "CheckStatus",
    "Metric",
    "RowMode",
    "ScenarioParams",
    "SweepRow",
    "SweepSpec",
    "ValidationReport",
]

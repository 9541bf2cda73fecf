from .power_splitting import (
    achievable_rate,
    effective_snr,
    effective_snr_array,
    legacy_rho,
    legacy_rho_array,
    max_min_snr,
    max_min_snr_array,
    optimal_rho,
    optimal_rho_array,
    optimal_snr_array,
    rate_array,
    snr_components,
)

__all__ = [
    "achievable_rate",
    "effective_snr",
    "effective_snr_array",
    "legacy_rho",
    "legacy_rho_array",
    "max_min_snr",
    "max_min_snr_array",
    "optimal_rho",
    "optimal_rho_array",
    "optimal_snr_array",
    "rate_array",
    "snr_components",
]

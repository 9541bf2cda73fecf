from .engine import (
    batch_std_err,
    estimate_both,
    estimate_capacity,
    estimate_outage,
    simulate,
)
from .streams import sample_gain_arrays, sample_gains, stream

__all__ = [
    "batch_std_err",
    "estimate_both",
    "estimate_capacity",
    "estimate_outage",
    "sample_gain_arrays",
    "sample_gains",
    "simulate",
    "stream",
]

"""Utilities shared by the toolkit modules."""

import math
from typing import List, Tuple

from swipt_relay.exceptions import ArgumentError


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    return 10.0 * math.log10(value)


def parse_snr_grid(text: str) -> List[float]:
    """Parse a ``start:stop:step`` dB grid (stop inclusive), or a single ``value``.

    Raises:
        ArgumentError: If the grid is malformed, ``step <= 0`` or ``stop < start``
    """
    parts = text.split(":")
    try:
        numbers = [float(p) for p in parts]
    except ValueError as e:
        raise ArgumentError(f"Invalid SNR grid '{text}': {e}") from e

    if len(numbers) == 1:
        return numbers
    if len(numbers) != 3:
        raise ArgumentError(f"Invalid SNR grid '{text}': expected start:stop:step")

    start, stop, step = numbers
    if step <= 0:
        raise ArgumentError(f"Invalid SNR grid '{text}': step must be > 0")
    if stop < start:
        raise ArgumentError(f"Invalid SNR grid '{text}': stop must be >= start")
    return snr_grid(start, stop, step)


def snr_grid(start: float, stop: float, step: float) -> List[float]:
    """Inclusive dB grid from ``start`` to ``stop``."""
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    # Rounding keeps 0.1-style steps from drifting into the CSV.
    return [round(start + i * step, 12) for i in range(count)]


def parse_quad(text: str) -> Tuple[int, int, int, int, int]:
    """Parse the ``N,M,N1,N2,N3`` node counts of the quadrature rules."""
    try:
        counts = tuple(int(p) for p in text.split(","))
    except ValueError as e:
        raise ArgumentError(f"Invalid quadrature spec '{text}': {e}") from e
    if len(counts) != 5:
        raise ArgumentError(
            f"Invalid quadrature spec '{text}': expected five counts N,M,N1,N2,N3"
        )
    return counts  # type: ignore[return-value]


def split_csv_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]

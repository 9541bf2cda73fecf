"""Base evaluator shared by the analytic and Monte Carlo back ends."""

import logging
import time
from abc import ABC, abstractmethod
from functools import wraps
from typing import List, Sequence

from swipt_relay.models.sweep import Metric, RowMode, SweepRow
from swipt_relay.models.system import Scheme, SystemParams

logger = logging.getLogger(__name__)


def log_evaluation(func):
    """Log what an evaluator is asked for and how long it took.

    The wrapped method is assumed to have the ``evaluate`` signature. Errors
    are logged with the evaluator's mode and re-raised unchanged.
    """

    @wraps(func)
    def wrapper(self, schemes, points, metrics, *args, **kwargs):
        labels = ",".join(str(s) for s in schemes)
        names = ",".join(m.value for m in metrics)
        logger.debug(
            f"{self.mode.value}: {len(points)} point(s), schemes [{labels}], metrics [{names}]"
        )
        start = time.perf_counter()
        try:
            rows = func(self, schemes, points, metrics, *args, **kwargs)
        except Exception as e:
            logger.warning(f"{self.mode.value} evaluation failed: {e}")
            raise
        logger.debug(
            f"{self.mode.value}: {len(rows)} row(s) in {time.perf_counter() - start:.2f}s"
        )
        return rows

    return wrapper


class BaseEvaluator(ABC):
    """Base class for everything that turns (scheme, SNR point, metric) into rows."""

    mode: RowMode

    def __init__(self, workers: int = 1):
        """Initialize with the degree of parallelism.

        Args:
            workers: Number of worker processes the evaluator may use
        """
        self.workers = workers

    def supports(self, scheme: Scheme) -> bool:
        """Whether this evaluator has a method for ``scheme``."""
        return True

    @abstractmethod
    def evaluate(
        self,
        schemes: Sequence[Scheme],
        points: Sequence[SystemParams],
        metrics: Sequence[Metric],
    ) -> List[SweepRow]:
        """Evaluate every supported (point, scheme, metric) combination.

        Args:
            schemes: Schemes to evaluate; unsupported ones are ignored
            points: System parameters, one per SNR grid point
            metrics: Metrics to compute

        Returns:
            Rows in (point, scheme, metric) order
        """

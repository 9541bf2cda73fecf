"""Closed-form evaluator for the proposed scheme."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence, Tuple

from swipt_relay.analytic import ergodic_capacity, outage_probability
from swipt_relay.models.analytic import EvalMode, QuadratureSpec
from swipt_relay.models.sweep import Metric, RowMode, SweepRow
from swipt_relay.models.system import Scheme, SchemeKind, SystemParams

from .base import BaseEvaluator, log_evaluation

logger = logging.getLogger(__name__)

_PointTask = Tuple[SystemParams, EvalMode, QuadratureSpec, Tuple[Metric, ...]]


def _evaluate_point(task: _PointTask) -> List[Tuple[Metric, float]]:
    p, mode, quadrature, metrics = task
    values = []
    for metric in metrics:
        if metric is Metric.OUTAGE:
            values.append((metric, outage_probability(p, mode, quadrature).total))
        else:
            values.append((metric, ergodic_capacity(p, quadrature, mode)))
    return values


class AnalyticEvaluator(BaseEvaluator):
    """Exact or Approx closed forms; only the proposed scheme has them."""

    def __init__(
        self,
        mode: EvalMode,
        quadrature: QuadratureSpec = QuadratureSpec(),
        workers: int = 1,
    ):
        super().__init__(workers)
        self.eval_mode = mode
        self.mode = RowMode(mode.value)
        self.quadrature = quadrature

    def supports(self, scheme: Scheme) -> bool:
        return scheme.kind is SchemeKind.PROPOSED

    @log_evaluation
    def evaluate(
        self,
        schemes: Sequence[Scheme],
        points: Sequence[SystemParams],
        metrics: Sequence[Metric],
    ) -> List[SweepRow]:
        supported = [s for s in schemes if self.supports(s)]
        if not supported:
            return []

        tasks = [(p, self.eval_mode, self.quadrature, tuple(metrics)) for p in points]
        if self.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=min(self.workers, len(tasks))) as executor:
                results = list(executor.map(_evaluate_point, tasks))
        else:
            results = [_evaluate_point(task) for task in tasks]

        rows = []
        for p, values in zip(points, results):
            for scheme in supported:
                for metric, value in values:
                    rows.append(
                        SweepRow(
                            snr_db=round(p.snr_db, 12),
                            scheme=scheme.label,
                            metric=metric,
                            mode=self.mode,
                            value=value,
                        )
                    )
        return rows

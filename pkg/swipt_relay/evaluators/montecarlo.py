"""Monte Carlo evaluator covering every scheme."""

import logging
from typing import List, Sequence

from swipt_relay.models.montecarlo import McConfig
from swipt_relay.models.sweep import Metric, RowMode, SweepRow
from swipt_relay.models.system import Scheme, SystemParams
from swipt_relay.montecarlo import simulate

from .base import BaseEvaluator, log_evaluation

logger = logging.getLogger(__name__)


class MonteCarloEvaluator(BaseEvaluator):
    mode = RowMode.MC

    def __init__(self, mc: McConfig = McConfig()):
        super().__init__(mc.workers)
        self.mc = mc

    @log_evaluation
    def evaluate(
        self,
        schemes: Sequence[Scheme],
        points: Sequence[SystemParams],
        metrics: Sequence[Metric],
    ) -> List[SweepRow]:
        estimates = simulate(schemes, points, self.mc)
        rows = []
        for p, per_scheme in zip(points, estimates):
            for scheme, (outage, capacity) in zip(schemes, per_scheme):
                for metric in metrics:
                    estimate = outage if metric is Metric.OUTAGE else capacity
                    rows.append(
                        SweepRow(
                            snr_db=round(p.snr_db, 12),
                            scheme=scheme.label,
                            metric=metric,
                            mode=self.mode,
                            value=estimate.mean,
                            std_err=estimate.std_err,
                        )
                    )
        return rows

import logging

from swipt_relay.models.analytic import EvalMode, QuadratureSpec
from swipt_relay.models.montecarlo import McConfig
from swipt_relay.models.sweep import RowMode

from .analytic import AnalyticEvaluator
from .base import BaseEvaluator
from .montecarlo import MonteCarloEvaluator

logger = logging.getLogger(__name__)


class RelayToolkit:
    """Orchestrates the evaluators that produce sweep rows."""

    def __init__(
        self, quadrature: QuadratureSpec = QuadratureSpec(), mc: McConfig = McConfig()
    ):
        self.quadrature = quadrature
        self.mc = mc

        # Initialize evaluators
        self.exact = AnalyticEvaluator(EvalMode.EXACT, quadrature, mc.workers)
        self.approx = AnalyticEvaluator(EvalMode.APPROX, quadrature, mc.workers)
        self.montecarlo = MonteCarloEvaluator(mc)

    def evaluator(self, mode: RowMode) -> BaseEvaluator:
        if mode is RowMode.EXACT:
            return self.exact
        if mode is RowMode.APPROX:
            return self.approx
        return self.montecarlo


__all__ = [
    "AnalyticEvaluator",
    "BaseEvaluator",
    "MonteCarloEvaluator",
    "RelayToolkit",
]

"""Fixed-memory on-line forecasting of sensor temperature streams.

The package has three layers:

* model cores: sequential on-line back-propagation networks (:mod:`tempcast.ann`)
  and a recursive Bayesian linear baseline (:mod:`tempcast.bayes`);
* the streaming pipeline that turns irregular timed frames into quarter means,
  first-order differences and forecasts (:mod:`tempcast.pipeline`);
* experiment machinery: frame sources (:mod:`tempcast.sources`), error metrics
  (:mod:`tempcast.metrics`), the experiment driver (:mod:`tempcast.harness`)
  and report/figure output (:mod:`tempcast.report`), fronted by the
  ``tempcast`` CLI (:mod:`tempcast.cli`).
"""

from tempcast.ann import AnnModel, AnnTopology, LearnSchedule, ModelDivergedError
from tempcast.bayes import BayesState, bootstrap_fit, informative_update
from tempcast.pipeline import (
    Forecast,
    OnlinePipeline,
    QuarterAggregator,
    TimedSample,
    TrainForecastStage,
)

__version__ = "0.1.0"

__all__ = [
    "AnnModel",
    "AnnTopology",
    "BayesState",
    "Forecast",
    "LearnSchedule",
    "ModelDivergedError",
    "OnlinePipeline",
    "QuarterAggregator",
    "TimedSample",
    "TrainForecastStage",
    "bootstrap_fit",
    "informative_update",
]

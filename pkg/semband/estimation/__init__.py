"""Per-node least squares, confidence ellipsoids and Gaussian posteriors."""

from semband.estimation.bank import CHECKPOINT_VERSION, EstimatorBank
from semband.estimation.confidence import (
    ConfidenceSpec,
    confidence_radius,
    ellipsoid_linear_max,
    in_confidence_set,
    project_to_ball,
)
from semband.estimation.node_estimator import REFRESH_INTERVAL, NodeEstimator
from semband.estimation.posterior import sample_posterior

__all__ = [
    "CHECKPOINT_VERSION",
    "REFRESH_INTERVAL",
    "ConfidenceSpec",
    "EstimatorBank",
    "NodeEstimator",
    "confidence_radius",
    "ellipsoid_linear_max",
    "in_confidence_set",
    "project_to_ball",
    "sample_posterior",
]

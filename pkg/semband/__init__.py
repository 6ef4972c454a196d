from .environment import (
    NoiseModel,
    PriorConfig,
    SemParameters,
    optimal_action,
    sample_observation,
)
from .estimation import ConfidenceSpec, EstimatorBank, NodeEstimator
from .harness import ExperimentConfig, RegretTable, load_config, run_experiment
from .policies import (
    BaselineUcbPolicy,
    LinSemTsPolicy,
    LinSemUcbPolicy,
    PolicySettings,
    build_policy,
)
from .sem import (
    DagStructure,
    InterventionAction,
    enumerate_actions,
    expected_reward,
    reward_coefficients,
    validate_dag,
)
from .types import (
    ConfigError,
    GraphError,
    NumericalError,
    PolicyKind,
    SembandError,
)

__all__ = [
    "DagStructure",
    "InterventionAction",
    "validate_dag",
    "enumerate_actions",
    "reward_coefficients",
    "expected_reward",
    "NoiseModel",
    "PriorConfig",
    "SemParameters",
    "sample_observation",
    "optimal_action",
    "NodeEstimator",
    "EstimatorBank",
    "ConfidenceSpec",
    "PolicyKind",
    "PolicySettings",
    "build_policy",
    "LinSemUcbPolicy",
    "LinSemTsPolicy",
    "BaselineUcbPolicy",
    "ExperimentConfig",
    "RegretTable",
    "load_config",
    "run_experiment",
    "SembandError",
    "GraphError",
    "NumericalError",
    "ConfigError",
]

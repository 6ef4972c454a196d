import pytest

from semband.harness.config import ExperimentConfig
from tests.factories import make_config


@pytest.fixture
def small_config() -> ExperimentConfig:
    return make_config(horizon=15, instances=2, reps=2)

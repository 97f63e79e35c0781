import numpy as np
import pytest

from gravent import ExperimentConfig, PotentialModel


@pytest.fixture
def reference_newtonian() -> ExperimentConfig:
    return ExperimentConfig()


@pytest.fixture
def reference_idg() -> ExperimentConfig:
    return ExperimentConfig(model=PotentialModel.idg_from_ev(0.004))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240831)

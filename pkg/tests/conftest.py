import numpy as np
import pytest

from src.envs       import MountainCar, energy_pumping_action
from src.evaluation import EvalDataset, build_eval_dataset
from src.features   import BoundsSpec, RawFeaturizer
from src.utils      import Config

MC_BOUNDS = BoundsSpec(lower=MountainCar.lower_bounds, upper=MountainCar.upper_bounds)

class EdgeRng:
    """Generator stand-in whose uniform draws always return the lower bound"""

    def uniform(self, low=0.0, high=1.0, size=None):
        if size is None:
            return low
        return np.full(size, low, dtype=np.float64)

@pytest.fixture
def rng():
    return np.random.default_rng(1234)

@pytest.fixture
def edge_rng():
    return EdgeRng()

@pytest.fixture
def mc_bounds():
    return MC_BOUNDS

@pytest.fixture
def raw_mc():
    return RawFeaturizer(MC_BOUNDS)

@pytest.fixture(scope='session')
def small_dataset():
    """40 Mountain Car states from a short energy-pumping walk"""
    return build_eval_dataset(MountainCar(), energy_pumping_action, 2000, 40, np.random.default_rng(7))

@pytest.fixture
def random_dataset(rng):
    """States drawn uniformly from the Mountain Car box with arbitrary targets"""
    states = rng.uniform(MC_BOUNDS.low, MC_BOUNDS.high, size=(30, 2))
    return EvalDataset(states=states, true_values=rng.uniform(-200, 0, size=30))

@pytest.fixture
def settings():
    """Settings loaded from config/config.yaml"""
    Config.reset()
    yield Config()
    Config.reset()

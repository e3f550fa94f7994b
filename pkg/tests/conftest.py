import os

import numpy as np
import pytest

SEED = int(os.environ.get("GCLAB_SEED", "20260824"))


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)

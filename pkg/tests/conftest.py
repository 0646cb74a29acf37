import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from liouwave import BumpProfile, FDConfig, fd_wave_solve
import numpy as np


@pytest.fixture(scope="session")
def bump():
    return BumpProfile(-1.0, 1.0)


@pytest.fixture(scope="session")
def liouville_fd_field(bump):
    """Shared leapfrog reference for k=1 on the standard configuration."""
    cfg = FDConfig(x_min=-4.5, x_max=4.5, dx=1e-3, t_final=2.0)
    return fd_wave_solve(lambda x: np.exp(2.0 * x), bump, cfg, record_times=(0.5, 1.0, 2.0))

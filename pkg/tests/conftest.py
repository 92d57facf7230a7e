import sys

import numpy as np
import pytest

from tpdmean import Tensor3, check_tpd
from tpdmean.sampling import random_tensor

# Example tensors A, B (3x3x2, real) and their published geometric mean.
EX_A = [[[6, 1, 2], [1, 8, 3], [2, 3, 10]],
        [[4, 1, 2], [1, 6, 4], [2, 4, 2]]]
EX_B = [[[8, -3, -3], [-3, 6, 1], [-3, 1, 8]],
        [[-6, 2, 5], [2, -2, -3], [5, -3, -2]]]
EX_X = [[[4.5916, -0.6057, 0.1536], [-0.6057, 5.1580, 0.4850], [0.1536, 0.4850, 7.4309]],
        [[-0.4400, 0.3644, 2.2243], [0.3644, 1.4536, 0.0987], [2.2243, 0.0987, -0.0154]]]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def example_a():
    return Tensor3(EX_A)


@pytest.fixture
def example_b():
    return Tensor3(EX_B)


@pytest.fixture
def example_mean():
    return np.array(EX_X, dtype=float)


def rel_err(x, y):
    """Relative Frobenius distance between two tensors or arrays."""
    x = getattr(x, "data", x)
    y = getattr(y, "data", y)
    return float(np.linalg.norm(np.asarray(x) - np.asarray(y))
                 / max(np.linalg.norm(np.asarray(y)), 1e-300))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "REPORT", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)


def shrink(a, rng, frac=0.5):
    """Return ``a - d * w * w^H`` with a random tube vector ``w``.

    ``d`` is scaled so the subtracted term is at most ``frac`` times the
    smallest T-eigenvalue of ``a``; the result is T-PD and below ``a`` in the
    T-Loewner order.
    """
    w = random_tensor(a.n, 1, a.p, rng, real=a.is_real)
    ww = w @ w.H
    top = check_tpd(ww).lambda_max
    return a - ww * (frac * check_tpd(a).lambda_min / top)

"""Pytest conftest: make the top-level solver modules importable when running tests from repo root."""
import os
import sys

import pytest

_repo_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if _repo_dir not in sys.path:
    sys.path.insert(0, _repo_dir)

from scenario import validate_params  # noqa: E402

# Study scenario with the product manufacturer's brand preferred (theta < 1).
LOW_THETA = {
    "theta": 0.8,
    "A": 0.3,
    "gamma1": 0.4,
    "gamma2": 0.5,
    "m_i": 0.1,
    "m_e": 0.1,
    "w0": 0.05,
    "K": 0.0,
}
HIGH_THETA = dict(LOW_THETA, theta=1.25)


@pytest.fixture
def low_raw():
    return dict(LOW_THETA)


@pytest.fixture
def low_params():
    return validate_params(LOW_THETA)


@pytest.fixture
def high_params():
    return validate_params(HIGH_THETA)

import json
from pathlib import Path

import numpy as np
import pytest

from stochopt import TspInstance, cube_fixture, parse_tsp_file

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"
EXPERIMENTS = FIXTURES / "experiments"


@pytest.fixture(scope="session")
def eight():
    return parse_tsp_file(FIXTURES / "eight.tsp")


@pytest.fixture(scope="session")
def eight_oracle():
    return json.loads((FIXTURES / "eight.oracle.json").read_text())


@pytest.fixture()
def cube():
    return cube_fixture()


@pytest.fixture(scope="session")
def triangle():
    d = np.array([[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])
    return TspInstance(d, name="triangle")

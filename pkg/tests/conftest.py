import numpy as np
import pytest

from vbfcodes.codes import WeightDistribution
from vbfcodes.gf2m import FieldSpec
from vbfcodes.vecfun import gold, mm_product


def pytest_addoption(parser):
    parser.addoption(
        "--exhaustive",
        action="store_true",
        default=False,
        help="Widen sweeps: every lambda instead of a sample",
    )


@pytest.fixture(scope="session")
def exhaustive(request):
    return request.config.getoption("--exhaustive")


@pytest.fixture
def rng():
    return np.random.default_rng(20240617)


@pytest.fixture(scope="session")
def f16():
    return FieldSpec.default(4)


@pytest.fixture(scope="session")
def f32():
    return FieldSpec.default(5)


@pytest.fixture(scope="session")
def f128():
    return FieldSpec.default(7)


@pytest.fixture(scope="session")
def gold5():
    return gold(5, 1)


@pytest.fixture(scope="session")
def gold7():
    return gold(7, 1)


@pytest.fixture(scope="session")
def mm3():
    return mm_product(3)


@pytest.fixture(scope="session")
def mm4():
    return mm_product(4)


def validate_weight_distribution(wd: WeightDistribution, n: int, k: int) -> list[str]:
    """Structural checks every enumerated distribution must pass."""
    errors: list[str] = []
    counts = wd.as_dict()
    if counts.get(0) != 1:
        errors.append(f"A_0 must be 1, got {counts.get(0)}")
    if wd.total() != 1 << k:
        errors.append(f"multiplicities sum to {wd.total()}, expected 2^{k}")
    if any(w > n for w in counts):
        errors.append(f"weight above the length {n}: {max(counts)}")
    return errors


@pytest.fixture(scope="session")
def check_distribution():
    return validate_weight_distribution

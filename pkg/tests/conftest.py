import math

import pytest

from energy_series import PotentialSpec, build_series

SQUARE_WELL = PotentialSpec.square_well()
HARMONIC = PotentialSpec.power(2)
LINEAR = PotentialSpec.power(1)
QUARTIC = PotentialSpec.power(4)
CUBIC = PotentialSpec.power(3)

# first two levels, where known in closed form
EXACT_E0 = {"square-well": math.pi ** 2 / 4, "power:2": 1.0, "power:1": 1.0187929716474710}
EXACT_E1 = {"square-well": math.pi ** 2, "power:2": 3.0, "power:1": 2.3381074104597670}
QUARTIC_E0 = 1.0603620904841829


@pytest.fixture(scope="session")
def sq_series():
    return build_series(SQUARE_WELL, 8)


@pytest.fixture(scope="session")
def harmonic_series():
    return build_series(HARMONIC, 8)


@pytest.fixture(scope="session")
def linear_series():
    return build_series(LINEAR, 8)


@pytest.fixture(scope="session")
def quartic_series():
    return build_series(QUARTIC, 3)


@pytest.fixture(scope="session")
def cubic_series():
    return build_series(CUBIC, 8, error_estimates=False)


@pytest.fixture(scope="session")
def hermitian_series(sq_series, harmonic_series, linear_series, quartic_series):
    return {"square-well": sq_series, "power:2": harmonic_series,
            "power:1": linear_series, "power:4": quartic_series}

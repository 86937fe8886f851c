import random

import pytest
from hypothesis import HealthCheck, settings

from quatpoly.quaternions import Quaternion, quat
from quatpoly.scalars import EXACT, FLOAT64, rational

settings.register_profile(
    "quatpoly",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("quatpoly")


def q(w=0, x=0, y=0, z=0) -> Quaternion:
    """Exact-backend quaternion from ints, Fractions or 'p/q' strings."""
    return quat(w, x, y, z, ctx=EXACT)


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture
def ex():
    return EXACT


@pytest.fixture
def fl():
    return FLOAT64


ONE = q(1)
I = q(0, 1)
J = q(0, 0, 1)
K = q(0, 0, 0, 1)

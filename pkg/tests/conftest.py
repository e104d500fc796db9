import os

import hypothesis
import pytest

from helpers import D4, D6
from krcrystal.services.kr import KRCrystal

hypothesis.settings.register_profile("default", max_examples=40, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def b22_d4() -> KRCrystal:
    return KRCrystal(D4, 2, 2)


@pytest.fixture(scope="session")
def b11_d4() -> KRCrystal:
    return KRCrystal(D4, 1, 1)


@pytest.fixture(scope="session")
def b45_d6() -> KRCrystal:
    return KRCrystal(D6, 4, 5)

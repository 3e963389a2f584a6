import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from hyperring import load_fixture  # noqa: E402
from hyperring.catalog import builtin_catalog  # noqa: E402
from hyperring.construct import zn_template  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture
def z4h():
    return load_fixture("z4h")


@pytest.fixture(scope="session")
def z6a():
    return zn_template(6, (2, 3))


@pytest.fixture(scope="session")
def z10a():
    return zn_template(10, (2, 3))

import pytest
from hypothesis import settings

from jonesrep.arith import ParameterSpec

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def generic():
    return ParameterSpec.generic()

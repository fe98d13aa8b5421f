import pytest
from hypothesis import settings

from utils.exactla import LinearMap

settings.register_profile("exact", max_examples=40, deadline=None)
settings.load_profile("exact")


@pytest.fixture
def small_singular():
    return LinearMap.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])

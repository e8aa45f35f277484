import pytest

from wenzl.jw import GLOBAL_JW_CACHE
from wenzl.pjw import GLOBAL_CACHES


@pytest.fixture(scope="session")
def caches():
    """Shared memo tables; projectors built once per test session."""
    return GLOBAL_CACHES


@pytest.fixture(scope="session")
def jw_cache():
    return GLOBAL_JW_CACHE

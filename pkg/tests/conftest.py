import functools

import pytest

from sccgraph import catalog


@functools.lru_cache(maxsize=None)
def cached_group(spec: str):
    return catalog.make(spec)


@pytest.fixture
def group():
    return cached_group

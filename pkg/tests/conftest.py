from __future__ import annotations

import pytest
from hypothesis import settings

from semirep.groups import ZOO, named_group

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def zoo():
    return {name: named_group(name) for name in ZOO}


@pytest.fixture(params=ZOO)
def zoo_group(request):
    return named_group(request.param)

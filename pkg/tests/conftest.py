import functools

import pytest

from cyclohecke.exactfield import default_params
from cyclohecke.gprn import GrpnLayer
from cyclohecke.seminormal import SeminormalForm

ACCEPTANCE_GRID = [(1, 1, 3), (2, 2, 2), (2, 2, 3), (2, 1, 3), (3, 3, 2), (4, 2, 2), (4, 4, 2)]


@functools.lru_cache(maxsize=None)
def form(r, p, n):
    return SeminormalForm(default_params(r, p, n))


@functools.lru_cache(maxsize=None)
def layer(r, p, n):
    return GrpnLayer(form(r, p, n))


@pytest.fixture
def sf222():
    return form(2, 2, 2)

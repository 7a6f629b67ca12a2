"""Shared fixtures: closure models are expensive enough to build once."""

from __future__ import annotations

import pytest

from pgonal.galois import build_closure_model

_MODELS: dict[int, object] = {}


def get_model(p: int):
    if p not in _MODELS:
        _MODELS[p] = build_closure_model(p)
    return _MODELS[p]


@pytest.fixture(scope="session")
def model3():
    return get_model(3)


@pytest.fixture(scope="session")
def model5():
    return get_model(5)


@pytest.fixture(scope="session")
def model7():
    return get_model(7)


@pytest.fixture(scope="session")
def model(request):
    return get_model(request.param)

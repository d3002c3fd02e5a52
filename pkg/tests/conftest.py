import pytest

from cyclomat import CycloCtx, build_field

_FIELDS = {}
_CONTEXTS = {}


def field_of(p, n=1):
    key = (p, n)
    if key not in _FIELDS:
        _FIELDS[key] = build_field(p, n)
    return _FIELDS[key]


def context_of(p, n, ell):
    key = (p, n, ell)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = CycloCtx(field_of(p, n), ell)
    return _CONTEXTS[key]


@pytest.fixture(scope="session")
def fields():
    return field_of


@pytest.fixture(scope="session")
def cyclo():
    return context_of

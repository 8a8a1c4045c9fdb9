import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from sollink import make_field

_CACHE = {}


@pytest.fixture
def field5():
    return field(5)


@pytest.fixture
def field13():
    return field(13)


def field(d: int):
    """Shared FieldData instances so unit computation runs once per d."""
    if d not in _CACHE:
        _CACHE[d] = make_field(d)
    return _CACHE[d]

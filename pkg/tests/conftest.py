import pathlib

import pytest

FIXDIR = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixdir() -> pathlib.Path:
    return FIXDIR

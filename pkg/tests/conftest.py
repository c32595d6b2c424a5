import pytest

from eaqecc import gf4
from eaqecc.builder import ClassicalCode, build_code


@pytest.fixture
def h4_code() -> ClassicalCode:
    """The [4,2,3] quaternary code whose parity checks do not commute."""
    return ClassicalCode.from_rows(
        4, 2, [(gf4.ONE, gf4.OMEGA, gf4.ONE, gf4.ZERO), (gf4.ONE, gf4.ONE, gf4.ZERO, gf4.ONE)]
    )


@pytest.fixture
def golden(h4_code):
    """The [[4,1;1]] code built from h4_code."""
    return build_code(h4_code)

from __future__ import annotations

import pytest

from vhodge import build_milnor, parse_expression


def milnor(text: str, variables: list[str]):
    return build_milnor(parse_expression(text, variables))


@pytest.fixture(scope="session")
def cubic():
    """Fermat cubic x^3 + y^3 + z^3, the counterexample instance."""
    return milnor("x^3+y^3+z^3", ["x", "y", "z"])


@pytest.fixture(scope="session")
def quadric3():
    return milnor("x^2+y^2+z^2", ["x", "y", "z"])


@pytest.fixture(scope="session")
def cusp():
    return milnor("x^2+y^3", ["x", "y"])


@pytest.fixture(scope="session")
def quartic():
    return milnor("x^4+y^4+z^4", ["x", "y", "z"])


@pytest.fixture(scope="session")
def e8_like():
    return milnor("x^3+y^5", ["x", "y"])

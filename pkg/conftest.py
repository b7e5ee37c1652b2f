import pytest

import catalogue
from periodic import PeriodicPoint
from substitution import Substitution, parse_substitution


@pytest.fixture(scope="session")
def points() -> dict[str, PeriodicPoint]:
    """The seven catalogue points by name."""
    return dict(catalogue.table_points())


@pytest.fixture(scope="session")
def gamma(points: dict[str, PeriodicPoint]) -> PeriodicPoint:
    return points["gamma"]


@pytest.fixture(scope="session")
def tau(points: dict[str, PeriodicPoint]) -> PeriodicPoint:
    return points["tau"]


@pytest.fixture(scope="session")
def beta(points: dict[str, PeriodicPoint]) -> PeriodicPoint:
    return points["beta"]


@pytest.fixture(scope="session")
def chi(points: dict[str, PeriodicPoint]) -> PeriodicPoint:
    return points["chi"]


@pytest.fixture(scope="session")
def phi() -> Substitution:
    return parse_substitution("a -> ab\nb -> a")


@pytest.fixture(scope="session")
def psi_t() -> Substitution:
    return parse_substitution("a -> ab\nb -> ac\nc -> a")


@pytest.fixture(scope="session")
def mu() -> Substitution:
    return parse_substitution("a -> abc\nb -> c\nc -> ac")


@pytest.fixture(scope="session")
def rho() -> Substitution:
    return parse_substitution("a -> ac\nb -> cb\nc -> c")

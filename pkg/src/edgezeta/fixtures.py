"""Small named graphs shipped with the package."""

from __future__ import annotations

from importlib import resources

from .graph import Graph
from .io import parse_edge_list

FIXTURES = ("k4_minus_edge", "multiloop_a", "multiloop_b", "samezeta_x", "samezeta_y")


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files(__package__).joinpath("data").joinpath(f"{name}.edges").read_text(encoding="utf-8")


def load_fixture(name: str) -> Graph:
    return parse_edge_list(fixture_text(name), name)


def fixture_path(name: str):
    """Traversable for the fixture file (a real path for regular installs)."""
    fixture_text(name)
    return resources.files(__package__).joinpath("data").joinpath(f"{name}.edges")

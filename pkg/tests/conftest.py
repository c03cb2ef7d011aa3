from __future__ import annotations

from pathlib import Path

import pytest

from sombor.formats import load_graph6
from sombor.graph import is_connected

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def atlas():
    """Every graph on 1..7 vertices up to isomorphism (1252 graphs)."""
    return load_graph6(str(DATA / "atlas_1to7.g6"))


@pytest.fixture(scope="session")
def connected_atlas(atlas):
    return [g for g in atlas if is_connected(g)]

import random

import pytest

from seytight import Orientation


def random_orientation(rng: random.Random, n: int, p: float = 0.5) -> Orientation:
    """Independent pair states: absent with prob 1-p, else a uniform direction."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Orientation(n, arcs)


@pytest.fixture
def rng():
    return random.Random(0x5E71)

import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from hyperquiver.model import Hyperedge, Hyperquiver

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@st.composite
def hyperquivers(draw, max_n=3, max_edges=3, max_mu=3, max_dim=3):
    """Random valid (hyperquiver, dims) pairs."""
    n = draw(st.integers(1, max_n))
    vertex = st.integers(1, n)
    edges = draw(
        st.lists(
            st.builds(
                lambda s, t: Hyperedge(tuple(s), t),
                st.lists(vertex, min_size=1, max_size=max_mu),
                vertex,
            ),
            max_size=max_edges,
        )
    )
    dims = tuple(draw(st.lists(st.integers(1, max_dim), min_size=n, max_size=n)))
    return Hyperquiver(n, tuple(edges)), dims


def random_hyperquiver(rng: random.Random, max_n=3, max_edges=3, max_mu=3, max_dim=3):
    n = rng.randint(1, max_n)
    edges = tuple(
        Hyperedge(tuple(rng.randint(1, n) for _ in range(rng.randint(1, max_mu))), rng.randint(1, n))
        for _ in range(rng.randint(0, max_edges))
    )
    dims = tuple(rng.randint(1, max_dim) for _ in range(n))
    return Hyperquiver(n, edges), dims

import random

import pytest

from syzkit import (
    MinkowskiDecomposition,
    UnimodularSimplex,
    hull,
    summand_from_vertices,
)

HEXAGON_CORNERS = [(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)]


@pytest.fixture
def hexagon():
    return hull(HEXAGON_CORNERS)


@pytest.fixture
def unit_square():
    return hull([(0, 0), (1, 0), (1, 1), (0, 1)])


def seg(u):
    return UnimodularSimplex(len(u), (u,))


def tri(u, v):
    return UnimodularSimplex(len(u), (u, v))


@pytest.fixture
def hexagon_segments(hexagon):
    return MinkowskiDecomposition(
        hexagon, (0, 0), (seg((1, 0)), seg((0, 1)), seg((1, 1)))
    )


@pytest.fixture
def hexagon_triangles(hexagon):
    return MinkowskiDecomposition(
        hexagon, (0, 0), (tri((1, 0), (1, 1)), tri((0, 1), (1, 1)))
    )


@pytest.fixture
def conifold(unit_square):
    return MinkowskiDecomposition(unit_square, (0, 0), (seg((1, 0)), seg((0, 1))))


def ap_decomposition(p):
    segment = hull([(0,), (p + 1,)])
    return MinkowskiDecomposition(segment, (0,), tuple(seg((1,)) for _ in range(p + 1)))


@pytest.fixture
def a1():
    return ap_decomposition(1)


def random_unimodular_simplex(rng: random.Random, lo=-2, hi=2) -> UnimodularSimplex:
    """Random origin-rooted unimodular segment or triangle with entries in [lo, hi]."""
    while True:
        if rng.random() < 0.5:
            u = (rng.randint(lo, hi), rng.randint(lo, hi))
            if u == (0, 0):
                continue
            try:
                return summand_from_vertices(2, ((0, 0), u))
            except ValueError:
                continue
        u = (rng.randint(lo, hi), rng.randint(lo, hi))
        v = (rng.randint(lo, hi), rng.randint(lo, hi))
        if abs(u[0] * v[1] - u[1] * v[0]) != 1:
            continue
        return summand_from_vertices(2, ((0, 0), u, v))

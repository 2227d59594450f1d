"""Shared fixtures: the small corpus of toric models used across the suite."""

import pytest

from algstat import GREVLEX, Ideal, IntMatrix, PolyRing, parse_polynomial


@pytest.fixture
def p1_matrix():
    return IntMatrix([[1, 1], [0, 1]])


@pytest.fixture
def p2_matrix():
    return IntMatrix.identity(3)


@pytest.fixture
def rnc2_matrix():
    return IntMatrix([[1, 1, 1], [0, 1, 2]])


@pytest.fixture
def rnc3_matrix():
    return IntMatrix([[1, 1, 1, 1], [0, 1, 2, 3]])


@pytest.fixture
def indep22_matrix():
    return IntMatrix([
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ])


@pytest.fixture
def chain3_matrix():
    return IntMatrix([
        [1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1],
        [1, 0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0, 0, 1],
    ])


@pytest.fixture
def corpus(p1_matrix, p2_matrix, rnc2_matrix, rnc3_matrix, indep22_matrix,
           chain3_matrix):
    return [
        ("segre-line", p1_matrix),
        ("plane", p2_matrix),
        ("conic", rnc2_matrix),
        ("twisted-cubic", rnc3_matrix),
        ("independence-2x2", indep22_matrix),
        ("binary-3-chain", chain3_matrix),
    ]


@pytest.fixture
def hw_ideal():
    """The genotype-frequency conic 4*p_0*p_2 - p_1^2 as a plain ideal."""
    ring = PolyRing(("p_0", "p_1", "p_2"), GREVLEX)
    return Ideal(ring, [parse_polynomial("4*p_0*p_2 - p_1^2", ring)])

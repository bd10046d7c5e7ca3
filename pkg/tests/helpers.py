"""Shared test fixtures: the worked 4x4 example, field builders, and
hypothesis strategies.

WORKED_PAIRS is a hand-checked transcription of the full weight table
for the worked example (4x4 field, obstacles {2, 7, 8, 10}); tests
compare computed matrices against it rather than against the code under
test.
"""

import math

import numpy as np
from hypothesis import strategies as st

from gridplan import Field, random_field

SQRT2 = math.sqrt(2)
SQRT5 = math.sqrt(5)

WORKED_MAP_TEXT = ".#..\n..##\n.#..\n....\n"
WORKED_OBSTACLES = frozenset({2, 7, 8, 10})

# Finite off-diagonal entries of the worked example's weight matrix,
# upper triangle only; everything else off-diagonal is inf.
WORKED_PAIRS = {
    (1, 5): 1.0, (1, 9): 2.0, (1, 13): 3.0,
    (3, 4): 1.0,
    (5, 6): 1.0, (5, 9): 1.0, (5, 13): 2.0,
    (9, 13): 1.0,
    (11, 12): 1.0, (11, 15): 1.0, (11, 16): SQRT2,
    (12, 14): SQRT5, (12, 15): SQRT2, (12, 16): 1.0,
    (13, 14): 1.0, (13, 15): 2.0, (13, 16): 3.0,
    (14, 15): 1.0, (14, 16): 2.0,
    (15, 16): 1.0,
}


def worked_field() -> Field:
    return Field(4, 4, WORKED_OBSTACLES)


def worked_weight_matrix() -> np.ndarray:
    """The expected 16x16 weight matrix, built from WORKED_PAIRS."""
    w = np.full((16, 16), np.inf)
    np.fill_diagonal(w, 0.0)
    for (a, b), v in WORKED_PAIRS.items():
        w[a - 1, b - 1] = v
        w[b - 1, a - 1] = v
    return w


def enclosed_dest_field() -> tuple:
    """5x5 field whose center cell 13 is walled in; returns (field, dest).

    Ring of obstacles around the center leaves no line of sight out of
    it, so every route to 13 has infinite length.
    """
    ring = frozenset({7, 8, 9, 12, 14, 17, 18, 19})
    return Field(5, 5, ring), 13


def corpus_field(rng: np.random.Generator, max_side: int = 12,
                 max_density: float = 0.4) -> Field:
    """One random field for oracle corpora: sides in [1, max_side],
    obstacle density in [0, max_density]."""
    width = int(rng.integers(1, max_side + 1))
    height = int(rng.integers(1, max_side + 1))
    n = width * height
    density = float(rng.uniform(0.0, max_density))
    num_obstacles = min(int(density * n), n - 1)
    return random_field(width, height, num_obstacles,
                        seed=int(rng.integers(2**63)))


def oracle_corpus(count: int, seed: int, max_side: int = 12) -> list:
    rng = np.random.default_rng(seed)
    return [corpus_field(rng, max_side=max_side) for _ in range(count)]


@st.composite
def small_fields(draw, max_side: int = 6, max_density: float = 0.5):
    width = draw(st.integers(1, max_side))
    height = draw(st.integers(1, max_side))
    n = width * height
    max_obstacles = min(int(max_density * n), n - 1)
    obstacles = draw(st.sets(st.integers(1, n), max_size=max_obstacles))
    return Field(width, height, frozenset(obstacles))


@st.composite
def fields_with_free_pair(draw, max_side: int = 6):
    """A small field plus two (possibly equal) free cells."""
    field = draw(small_fields(max_side=max_side))
    free = sorted(set(range(1, field.n_cells + 1)) - field.obstacles)
    a = draw(st.sampled_from(free))
    b = draw(st.sampled_from(free))
    return field, a, b

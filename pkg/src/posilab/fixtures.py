"""Small operators exercised throughout the test and verification suites."""

import numpy as np

from . import condexp


def nilpotent_shift(dim: int = 3) -> np.ndarray:
    """Strictly upper shift: e_{i+1} -> e_i, nilpotent of order ``dim``."""
    return np.eye(dim, k=1, dtype=complex)


def clipped_shift(dim: int = 6) -> np.ndarray:
    """(x1, x2, x3, ...) -> (x2, x3, 0, ...): two coordinates survive.

    Finite section of the corresponding sequence-space operator; any
    dim >= 3 reproduces its behaviour exactly since the cube vanishes.
    """
    m = np.zeros((dim, dim), dtype=complex)
    m[0, 1] = 1.0
    m[1, 2] = 1.0
    return m


def invariant_block_matrix() -> np.ndarray:
    """4x4 upper-triangular pair: span{e1, e2} is invariant."""
    return np.array(
        [[1, 1, 0, 0],
         [0, 2, 0, 0],
         [0, 0, 0, 1],
         [0, 0, 0, 0]], dtype=complex)


def split_range_matrix() -> np.ndarray:
    """4x4 with rank-3 first power: splits as a 3+1 block triangle."""
    return np.array(
        [[2, 1, 0, 0],
         [0, 1, 0, 0],
         [0, 0, 0, 1],
         [0, 0, 0, 0]], dtype=complex)


def interval_example(n_atoms: int = 8):
    """Discretized two-block interval weights; see condexp for details."""
    return condexp.discretize_interval_example(n_atoms)

import math

import numpy as np
import pytest

import gwmono as gm


@pytest.fixture
def example1():
    """Four-qubit worked example: amplitudes (sqrt(.5), .5, .4, .3) on sites 1..4."""
    return gm.make_gw_state(4, 2, [math.sqrt(0.5), 0.5, 0.4, 0.3])


@pytest.fixture
def example1_vec(example1):
    return gm.to_state_vector(example1)


def random_gw_state(rng, n_lo=3, n_hi=8, d_lo=2, d_hi=4):
    n = int(rng.integers(n_lo, n_hi + 1))
    d = int(rng.integers(d_lo, d_hi + 1))
    table = rng.standard_normal((n, d - 1)) + 1j * rng.standard_normal((n, d - 1))
    return gm.make_gw_state(n, d, table / np.linalg.norm(table))


def random_partition(rng, n, min_blocks=2, max_blocks=4, subset_ok=True):
    """Random ordered partition of (a subset of) sites 1..n into disjoint blocks."""
    sites = list(rng.permutation(np.arange(1, n + 1)))
    if subset_ok and n > 3 and rng.random() < 0.4:
        sites = sites[:-1]
    m = len(sites)
    r = int(rng.integers(min_blocks, min(max_blocks, m) + 1))
    cuts = sorted(rng.choice(np.arange(1, m), size=r - 1, replace=False))
    blocks, start = [], 0
    for c in list(cuts) + [m]:
        blocks.append(tuple(int(x) for x in sites[start:c]))
        start = c
    return gm.Partition(tuple(blocks))

"""Small hand-buildable fixtures shared across test modules."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def cyclic_mu(n):
    """Structure constants of the cyclic group algebra: e_i e_j = e_{i+j mod n}."""
    return [
        [[1 if k == (i + j) % n else 0 for k in range(n)] for j in range(n)]
        for i in range(n)
    ]


def grouplike_delta(n):
    """Diagonal coproduct: delta(e_i) = e_i ⊗ e_i."""
    return [
        [[1 if i == j == k else 0 for k in range(n)] for j in range(n)]
        for i in range(n)
    ]


def power_rows(n, k):
    """Matrix of the basis map e_j -> e_{k*j mod n} (columns are images)."""
    return [[1 if i == (k * j) % n else 0 for j in range(n)] for i in range(n)]


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def perturbed(constants, index, bump=1):
    """Copy nested structure constants with one entry shifted by ``bump``."""
    import copy

    data = copy.deepcopy(constants)
    target = data
    for i in index[:-1]:
        target = target[i]
    target[index[-1]] = target[index[-1]] + bump
    return data

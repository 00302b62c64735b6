"""Pure-numpy fallback for the hot kernels (see _ckernel.pyx)."""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def closure(table: np.ndarray, gens: np.ndarray, order: int) -> np.ndarray:
    """Members of <gens> as a sorted int32 array.

    Right-multiplication orbit of the identity: the orbit of e under
    x -> x*g is exactly the subgroup generated (finite group, so inverses
    are positive powers).
    """
    member = np.zeros(order, dtype=bool)
    member[0] = True
    frontier = np.array([0], dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64)
    while frontier.size:
        prod = table[np.ix_(frontier, gens)].ravel()
        prod = np.unique(prod)
        new = prod[~member[prod]]
        member[new] = True
        frontier = new
    return np.flatnonzero(member).astype(np.int32)

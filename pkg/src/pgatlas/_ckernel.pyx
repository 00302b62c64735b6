# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the subgroup machinery.

Only the closure loop lives here: it dominates the A1-subgroup descent
and is irregular enough that numpy cannot vectorize it well.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "c"


def closure(cnp.int32_t[:, ::1] table, gens, int order):
    """Members of <gens> as a sorted int32 array (BFS from the identity)."""
    cdef cnp.int32_t[::1] gen_arr = np.asarray(gens, dtype=np.int32)
    cdef int ngens = gen_arr.shape[0]
    cdef cnp.uint8_t[::1] member = np.zeros(order, dtype=np.uint8)
    cdef cnp.int32_t[::1] stack = np.empty(order, dtype=np.int32)
    cdef int top = 0, count = 0
    cdef int x, y, g

    member[0] = 1
    stack[top] = 0
    top += 1
    count = 1
    while top > 0:
        top -= 1
        x = stack[top]
        for g in range(ngens):
            y = table[x, gen_arr[g]]
            if not member[y]:
                member[y] = 1
                stack[top] = y
                top += 1
                count += 1
    out = np.empty(count, dtype=np.int32)
    cdef cnp.int32_t[::1] out_mv = out
    cdef int pos = 0
    for x in range(order):
        if member[x]:
            out_mv[pos] = x
            pos += 1
    return out

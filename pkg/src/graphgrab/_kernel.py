"""Bottom-up tables over all vertex subsets.

Both functions are compiled with numba for int64 inputs. The undecorated
versions (``.py_func``) run unchanged on object arrays of Python ints, which is
the exact fallback for weights too large for int64.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def valid_states(n, nbr, roots, rooted):
    """``valid[m] == 1`` iff every component of ``m`` holds a seed vertex.

    Seeds are ``roots & m`` in rooted mode, else the lowest vertex of ``m``
    (so validity means connectivity). The empty set is valid.
    """
    size = 1 << n
    valid = np.zeros(size, np.uint8)
    valid[0] = 1
    for m in range(1, size):
        if rooted:
            seen = roots & m
        else:
            seen = m & -m
        if seen == 0:
            continue
        while True:
            grow = seen
            for v in range(n):
                if (seen >> v) & 1:
                    grow |= nbr[v]
            grow &= m
            if grow == seen:
                break
            seen = grow
        if seen == m:
            valid[m] = 1
    return valid


@njit(cache=True)
def fill_differences(n, w, valid, diff):
    """Fill ``diff[m]``: mover's total minus opponent's total under optimal play.

    ``diff[m] = max(w[v] - diff[m - v])`` over ``v`` in ``m`` with ``m - v``
    valid. Returns -1 on success, else the first valid mask with no feasible
    move.
    """
    size = 1 << n
    for m in range(1, size):
        if not valid[m]:
            continue
        found = False
        best = diff[0]
        for v in range(n):
            if (m >> v) & 1:
                c = m ^ (1 << v)
                if valid[c]:
                    cand = w[v] - diff[c]
                    if not found or cand > best:
                        best = cand
                        found = True
        if not found:
            return m
        diff[m] = best
    return -1

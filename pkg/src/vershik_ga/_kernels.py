"""Compiled inner loops for word reduction in V_n (neighbours i-1, i+1 block i).

All kernels take int64 letter arrays; index 0 and n+1 are padding slots so
``i - 1`` and ``i + 1`` never need bounds checks.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def surviving(u, rank):
    """Positions kept by left-to-right cancellation.

    ``top[j]`` is the latest surviving position of index j and ``below[t]`` the
    surviving position of the same index under t, so each index carries a stack.
    """
    n = u.shape[0]
    top = np.full(rank + 2, -1, np.int64)
    below = np.empty(n, np.int64)
    alive = np.ones(n, np.bool_)
    for t in range(n):
        v = u[t]
        i = v if v > 0 else -v
        best = top[i - 1]
        if top[i] > best:
            best = top[i]
        if top[i + 1] > best:
            best = top[i + 1]
        if best >= 0 and u[best] == -v:
            top[i] = below[best]
            alive[best] = False
            alive[t] = False
        else:
            below[t] = top[i]
            top[i] = t
    return np.flatnonzero(alive)


@njit(cache=True)
def linear_order(w, rank):
    """Lex-least topological order of a reduced word, as positions.

    Letters of one index are totally ordered, so at most one letter per index is
    ever available: the head of that index's queue, once both neighbouring
    queues have moved past it. Picking the smallest such index picks the
    smallest letter under x_1 < x_1^-1 < x_2 < ...
    """
    n = w.shape[0]
    head = np.full(rank + 2, n, np.int64)  # n means "queue empty"
    nxt = np.full(n, n, np.int64)
    last = np.full(rank + 2, -1, np.int64)
    for t in range(n):
        v = w[t]
        i = v if v > 0 else -v
        if last[i] < 0:
            head[i] = t
        else:
            nxt[last[i]] = t
        last[i] = t
    order = np.empty(n, np.int64)
    for k in range(n):
        for i in range(1, rank + 1):
            h = head[i]
            if h < n and h < head[i - 1] and h < head[i + 1]:
                order[k] = h
                head[i] = nxt[h]
                break
    return order


@njit(cache=True)
def extremal(w, rank, from_left):
    """Letters of a reduced word with no non-commuting letter before (or after) them.

    For ``from_left`` these make up the floor; otherwise the roof.
    """
    n = w.shape[0]
    seen = np.zeros(rank + 2, np.bool_)
    out = np.zeros(n, np.bool_)
    for k in range(n):
        t = k if from_left else n - 1 - k
        v = w[t]
        i = v if v > 0 else -v
        if not (seen[i - 1] or seen[i] or seen[i + 1]):
            out[t] = True
        seen[i] = True
    return w[out]

"""numba-compiled versions of the hot loops (see ``_numpy`` for semantics)."""

from __future__ import annotations

import numpy as np
from numba import njit

from ._numpy import DEADLOCK, EARLY_REVISIT, EXTRA_ENABLED, NOT_CLOSED, OK, WRONG_LABEL


@njit(cache=True)
def first_violation(word, counts):
    n = word.shape[0]
    for q in range(n):
        a = word[q]
        b = word[(q + 1) % n]
        if a == b:
            continue
        pa = counts[a]
        pb = counts[b]
        na = 1
        nb = 1
        for k in range(2, n):
            da = pa - na
            if da > 0 and pb * da >= pa * (pb - nb + 1):
                return q, k
            c = word[(q + k) % n]
            if c == a:
                na += 1
            elif c == b:
                nb += 1
    return -1, -1


@njit(cache=True)
def marking_floor(word, a, b, pa, pb):
    m = pa * pb
    low = m
    for k in range(word.shape[0]):
        c = word[k]
        if c == a:
            m += pb
        elif c == b:
            m -= pa
        if m < low:
            low = m
    return pa * pb - low


@njit(cache=True)
def simulate_cycle(consume, produce, m0, word):
    n = word.shape[0]
    n_places, n_trans = consume.shape
    trace = np.empty((n, n_places), dtype=np.int64)
    m = m0.copy()
    trace[0, :] = m
    for i in range(n):
        count = 0
        hit = False
        for t in range(n_trans):
            ok = True
            for p in range(n_places):
                if m[p] < consume[p, t]:
                    ok = False
                    break
            if ok:
                count += 1
                if t == word[i]:
                    hit = True
        if count == 0:
            return DEADLOCK, i
        if not hit:
            return WRONG_LABEL, i
        if count > 1:
            return EXTRA_ENABLED, i
        t = word[i]
        for p in range(n_places):
            m[p] += produce[p, t] - consume[p, t]
        if i < n - 1:
            for j in range(i + 1):
                same = True
                for p in range(n_places):
                    if trace[j, p] != m[p]:
                        same = False
                        break
                if same:
                    return EARLY_REVISIT, i
            trace[i + 1, :] = m
    for p in range(n_places):
        if m[p] != m0[p]:
            return NOT_CLOSED, n - 1
    return OK, n

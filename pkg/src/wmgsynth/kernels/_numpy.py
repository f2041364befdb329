"""Pure-numpy implementations of the hot loops.

Same signatures and results as the numba versions; used when numba is
unavailable or disabled through WMGSYNTH_DISABLE_NUMBA.
"""

from __future__ import annotations

import numpy as np

# simulate_cycle status codes
OK, WRONG_LABEL, EXTRA_ENABLED, DEADLOCK, EARLY_REVISIT, NOT_CLOSED = range(6)


def first_violation(word: np.ndarray, counts: np.ndarray) -> tuple[int, int]:
    """Scan every rotation for a violated pair inequality.

    For the rotation starting at q with leading pair ab (a != b), let na, nb
    count a and b in its first k letters.  The check at k (2 <= k < n) fails
    when P(a) - na > 0 and P(b) * (P(a) - na) >= P(a) * (P(b) - nb + 1).
    Returns the first failing (q, k), or (-1, -1).
    """
    n = word.shape[0]
    if n < 3:
        return -1, -1
    for q in range(n):
        a = word[q]
        b = word[(q + 1) % n]
        if a == b:
            continue
        pa = counts[a]
        pb = counts[b]
        rot = np.roll(word, -q)
        na = np.cumsum(rot == a)[1:n - 1]   # counts over rot[0..k-1], k = 2..n-1
        nb = np.cumsum(rot == b)[1:n - 1]
        da = pa - na
        bad = (da > 0) & (pb * da >= pa * (pb - nb + 1))
        if bad.any():
            return q, int(np.argmax(bad)) + 2
    return -1, -1


def marking_floor(word: np.ndarray, a: int, b: int, pa: int, pb: int) -> int:
    """Initial marking pa*pb - Mmin of the place a -> b (weights pb in, pa out)."""
    steps = np.where(word == a, pb, 0) - np.where(word == b, pa, 0)
    low = min(0, int(np.cumsum(steps).min())) if steps.size else 0
    return -low


def simulate_cycle(consume: np.ndarray, produce: np.ndarray, m0: np.ndarray,
                   word: np.ndarray) -> tuple[int, int]:
    """Play ``word`` from ``m0`` demanding exactly one enabled transition per step.

    Returns (status, step) with status one of the module-level codes.
    """
    n = word.shape[0]
    delta = produce - consume
    m = m0.copy()
    seen = {m.tobytes()}
    for i in range(n):
        en = np.flatnonzero((m[:, None] >= consume).all(axis=0))
        t = word[i]
        if en.size == 0:
            return DEADLOCK, i
        if t not in en:
            return WRONG_LABEL, i
        if en.size > 1:
            return EXTRA_ENABLED, i
        m = m + delta[:, t]
        if i < n - 1:
            key = m.tobytes()
            if key in seen:
                return EARLY_REVISIT, i
            seen.add(key)
    if not np.array_equal(m, m0):
        return NOT_CLOSED, n - 1
    return OK, n

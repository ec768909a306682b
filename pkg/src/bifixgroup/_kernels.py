"""Hot inner loops over integer transition tables.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with the same signature.  The numba path is used when numba imports
cleanly and ``BIFIXGROUP_NO_NUMBA`` is unset (or ``0``).  Tables use ``-1`` for
an undefined transition.
"""
import os

import numpy as np

_DISABLED = os.environ.get("BIFIXGROUP_NO_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:  # pragma: no cover - exercised implicitly by the env flag
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


# --------------------------------------------------------------------------
# numpy versions
# --------------------------------------------------------------------------

def compose_rows_np(rows, t):
    """``out[i, q] = t[rows[i, q]]``; undefined stays undefined."""
    ext = np.append(t, -1).astype(rows.dtype, copy=False)
    return ext[rows]


def precompose_rows_np(rows, t):
    """``out[i, q] = rows[i, t[q]]``: the product ``t * rows[i]``."""
    ext = np.concatenate([rows, np.full((rows.shape[0], 1), -1, rows.dtype)], axis=1)
    return ext[:, t]


def row_ranks_np(rows):
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    s = np.sort(rows, axis=1)
    fresh = np.ones_like(s, dtype=bool)
    fresh[:, 1:] = s[:, 1:] != s[:, :-1]
    return np.count_nonzero(fresh & (s >= 0), axis=1)


def factor_hits_np(delta, init, finals, word):
    """``hits[i, j]`` is true iff ``word[i:j]`` is accepted (``i <= j``)."""
    n = word.shape[0]
    k = delta.shape[1]
    ext = np.vstack([delta, np.full((1, k), -1, delta.dtype)])
    fin = np.append(finals, False)
    hits = np.zeros((n + 1, n + 1), dtype=bool)
    cur = np.full(n + 1, init, dtype=np.int64)
    idx = np.arange(n + 1)
    hits[idx, idx] = fin[cur]
    for step in range(1, n + 1):
        starts = idx[: n + 1 - step]
        cur = ext[cur[: n + 1 - step], word[starts + step - 1]]
        hits[starts, starts + step] = fin[cur]
    return hits


def count_parses_np(star_hits, left_ok, right_ok):
    upper = np.triu(star_hits)
    return int(np.count_nonzero(upper & left_ok[:, None] & right_ok[None, :]))


def pair_hashes_np(ext, left, right, salt):
    """Hash of each product ``left[i] * right[i]`` of pool rows.

    ``ext`` holds rows extended by one column mapping the undefined marker to
    itself, so ``(s * t)[q] = ext[t, ext[s, q]]``.
    """
    n = ext.shape[1] - 1
    out = np.empty(len(left), dtype=np.uint64)
    step = 1 << 16
    for i in range(0, len(left), step):
        prod = np.take_along_axis(ext[right[i:i + step]], ext[left[i:i + step], :n].astype(np.int64), axis=1)
        out[i:i + step] = (prod.astype(np.uint64) * salt).sum(axis=1)
    return out


def pair_products_np(ext, left, right):
    n = ext.shape[1] - 1
    return np.take_along_axis(ext[right], ext[left, :n].astype(np.int64), axis=1)


def pair_match_np(ext, left, right, reps, group):
    """Does each product equal the representative row of its hash group."""
    n = ext.shape[1] - 1
    out = np.empty(len(left), dtype=bool)
    step = 1 << 16
    for i in range(0, len(left), step):
        prod = np.take_along_axis(ext[right[i:i + step]], ext[left[i:i + step], :n].astype(np.int64), axis=1)
        out[i:i + step] = (prod == reps[group[i:i + step]]).all(axis=1)
    return out


# --------------------------------------------------------------------------
# numba versions
# --------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def compose_rows_nb(rows, t):
        m, n = rows.shape
        out = np.empty_like(rows)
        for i in range(m):
            for q in range(n):
                p = rows[i, q]
                out[i, q] = t[p] if p >= 0 else -1
        return out

    @njit(cache=True)
    def precompose_rows_nb(rows, t):
        m, n = rows.shape
        out = np.empty_like(rows)
        for i in range(m):
            for q in range(n):
                p = t[q]
                out[i, q] = rows[i, p] if p >= 0 else -1
        return out

    @njit(cache=True)
    def row_ranks_nb(rows):
        m, n = rows.shape
        out = np.zeros(m, dtype=np.int64)
        seen = np.zeros(n, dtype=np.int64)
        for i in range(m):
            c = 0
            for q in range(n):
                p = rows[i, q]
                if p >= 0 and seen[p] != i + 1:
                    seen[p] = i + 1
                    c += 1
            out[i] = c
        return out

    @njit(cache=True)
    def factor_hits_nb(delta, init, finals, word):
        n = word.shape[0]
        hits = np.zeros((n + 1, n + 1), dtype=np.bool_)
        for i in range(n + 1):
            q = init
            hits[i, i] = finals[q]
            for j in range(i, n):
                q = delta[q, word[j]]
                if q < 0:
                    break
                hits[i, j + 1] = finals[q]
        return hits

    @njit(cache=True)
    def count_parses_nb(star_hits, left_ok, right_ok):
        n = star_hits.shape[0]
        c = 0
        for i in range(n):
            if not left_ok[i]:
                continue
            for j in range(i, n):
                if star_hits[i, j] and right_ok[j]:
                    c += 1
        return c

    @njit(cache=True)
    def pair_hashes_nb(ext, left, right, salt):
        n = ext.shape[1] - 1
        m = left.shape[0]
        out = np.empty(m, dtype=np.uint64)
        for i in range(m):
            s = left[i]
            t = right[i]
            h = np.uint64(0)
            for q in range(n):
                h += np.uint64(ext[t, ext[s, q]]) * salt[q]
            out[i] = h
        return out

    @njit(cache=True)
    def pair_products_nb(ext, left, right):
        n = ext.shape[1] - 1
        m = left.shape[0]
        out = np.empty((m, n), dtype=ext.dtype)
        for i in range(m):
            for q in range(n):
                out[i, q] = ext[right[i], ext[left[i], q]]
        return out

    @njit(cache=True)
    def pair_match_nb(ext, left, right, reps, group):
        n = ext.shape[1] - 1
        m = left.shape[0]
        out = np.ones(m, dtype=np.bool_)
        for i in range(m):
            g = group[i]
            for q in range(n):
                if ext[right[i], ext[left[i], q]] != reps[g, q]:
                    out[i] = False
                    break
        return out

    compose_rows = compose_rows_nb
    precompose_rows = precompose_rows_nb
    row_ranks = row_ranks_nb
    factor_hits = factor_hits_nb
    count_parses = count_parses_nb
    pair_hashes = pair_hashes_nb
    pair_products = pair_products_nb
    pair_match = pair_match_nb
else:  # pragma: no cover
    compose_rows = compose_rows_np
    precompose_rows = precompose_rows_np
    row_ranks = row_ranks_np
    factor_hits = factor_hits_np
    count_parses = count_parses_np
    pair_hashes = pair_hashes_np
    pair_products = pair_products_np
    pair_match = pair_match_np


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"

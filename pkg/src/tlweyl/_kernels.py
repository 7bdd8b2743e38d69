"""
Array kernels for the exhaustive sweeps.

Diagrams on ``m = n + 1`` strands are partner arrays of length ``2 m``: top
points T_1..T_m are 0..m-1, bottom points B_1..B_m are m..2m-1, and
``d[p]`` is the point joined to ``p``. Commuting reflection sets are partner
arrays of length ``m`` with ``-1`` for letters outside the support.

Each kernel exists twice: a row loop compiled by numba and a version that is
vectorised over rows with plain numpy. ``compose_batch`` and
``dense_update_batch`` point at one or the other depending on
:data:`tlweyl._accel.USE_NUMBA`.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

INDEX_DTYPE = np.int16


@njit
def _compose_row(top, bottom, out):
    """Stack ``top`` over ``bottom`` into ``out``; return the number of loops.

    Outer points keep their indices: the top row of ``top`` and the bottom
    row of ``bottom`` become the top and bottom rows of the product.
    """
    m = top.shape[0] // 2
    seen = np.zeros(m, dtype=np.bool_)
    for start in range(2 * m):
        if start < m:
            q = top[start]
            while q >= m:
                x = q - m
                seen[x] = True
                r = bottom[x]
                if r >= m:
                    q = r
                    break
                seen[r] = True
                q = top[r + m]
        else:
            q = bottom[start]
            while q < m:
                seen[q] = True
                r = top[q + m]
                if r < m:
                    q = r
                    break
                seen[r - m] = True
                q = bottom[r - m]
        out[start] = q
    loops = 0
    for x in range(m):
        if not seen[x]:
            loops += 1
            y = x
            while True:
                seen[y] = True
                z = bottom[y]
                seen[z] = True
                y = top[z + m] - m
                if y == x:
                    break
    return loops


@njit
def _compose_batch_numba(tops, bottoms, out):
    rows = tops.shape[0]
    loops = np.zeros(rows, dtype=np.int64)
    for r in range(rows):
        loops[r] = _compose_row(tops[r], bottoms[r], out[r])
    return loops


def _compose_batch_numba_entry(tops, bottoms):
    tops, bottoms = np.broadcast_arrays(tops, bottoms)
    tops = np.ascontiguousarray(tops, dtype=INDEX_DTYPE)
    bottoms = np.ascontiguousarray(bottoms, dtype=INDEX_DTYPE)
    out = np.empty_like(tops)
    loops = _compose_batch_numba(tops, bottoms, out)
    return loops, out


def _compose_batch_numpy(tops, bottoms):
    tops, bottoms = np.broadcast_arrays(tops, bottoms)
    tops = np.asarray(tops, dtype=np.int64)
    bottoms = np.asarray(bottoms, dtype=np.int64)
    rows, width = tops.shape
    m = width // 2
    idx = np.arange(rows)
    out = np.empty((rows, width), dtype=np.int64)
    seen = np.zeros((rows, m), dtype=bool)

    # walk every open strand at once; a walker sits on an interface point and
    # remembers which diagram it is about to enter
    for start in range(width):
        if start < m:
            q = tops[:, start]
            open_ = q >= m
            x = np.where(open_, q - m, 0)
            end = np.where(open_, -1, q)
            in_bottom = open_.copy()
        else:
            q = bottoms[:, start]
            open_ = q < m
            x = np.where(open_, q, 0)
            end = np.where(open_, -1, q)
            in_bottom = np.zeros(rows, dtype=bool)
        for _ in range(2 * m + 1):
            if not open_.any():
                break
            seen[idx[open_], x[open_]] = True
            nxt = np.where(in_bottom, bottoms[idx, x], tops[idx, x + m])
            # leaving through the far side of the diagram just entered
            leave = open_ & np.where(in_bottom, nxt >= m, nxt < m)
            end = np.where(leave, nxt, end)
            open_ = open_ & ~leave
            x = np.where(open_, np.where(in_bottom, nxt, nxt - m), x)
            in_bottom = np.where(open_, ~in_bottom, in_bottom)
        out[:, start] = end

    # closed loops: components of the unvisited interface points
    labels = np.tile(np.arange(m), (rows, 1))
    via_bottom = np.where(bottoms[:, :m] < m, bottoms[:, :m], labels)
    via_top = np.where(tops[:, m:] >= m, tops[:, m:] - m, labels)
    for _ in range(m):
        new = np.minimum(labels, np.minimum(np.take_along_axis(labels, via_bottom, 1),
                                            np.take_along_axis(labels, via_top, 1)))
        if np.array_equal(new, labels):
            break
        labels = new
    loops = ((labels == np.arange(m)) & ~seen).sum(axis=1)
    return loops, out.astype(INDEX_DTYPE)


@njit
def _dense_update_numba(partner, i, out):
    rows, m = partner.shape
    for r in range(rows):
        for k in range(m):
            out[r, k] = partner[r, k]
        a = partner[r, i]
        b = partner[r, i + 1]
        if a == i + 1:
            continue
        if a >= 0 and b >= 0:
            out[r, a] = b
            out[r, b] = a
        elif a >= 0:
            out[r, a] = -1
        elif b >= 0:
            out[r, b] = -1
        out[r, i] = i + 1
        out[r, i + 1] = i


def _dense_update_numba_entry(partner, i):
    partner = np.ascontiguousarray(partner, dtype=INDEX_DTYPE)
    out = np.empty_like(partner)
    _dense_update_numba(partner, i, out)
    return out


def _dense_update_numpy(partner, i):
    out = np.array(partner, dtype=INDEX_DTYPE, copy=True)
    rows = np.arange(out.shape[0])
    a = out[:, i].astype(np.int64)
    b = out[:, i + 1].astype(np.int64)
    moving = a != i + 1
    both = moving & (a >= 0) & (b >= 0)
    only_a = moving & (a >= 0) & (b < 0)
    only_b = moving & (a < 0) & (b >= 0)
    out[rows[both], a[both]] = b[both]
    out[rows[both], b[both]] = a[both]
    out[rows[only_a], a[only_a]] = -1
    out[rows[only_b], b[only_b]] = -1
    out[moving, i] = i + 1
    out[moving, i + 1] = i
    return out


if USE_NUMBA:
    compose_batch = _compose_batch_numba_entry
    dense_update_batch = _dense_update_numba_entry
else:
    compose_batch = _compose_batch_numpy
    dense_update_batch = _dense_update_numpy

IMPLEMENTATIONS = {
    "numba": (_compose_batch_numba_entry, _dense_update_numba_entry),
    "numpy": (_compose_batch_numpy, _dense_update_numpy),
}

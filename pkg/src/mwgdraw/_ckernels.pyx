# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: integer Gabriel blocking and the search inner loops.

Coordinates are int64 numerators over a shared denominator; callers keep
|coordinate| < COORD_LIMIT so every dot product fits in 63 bits.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp

COORD_LIMIT = 1 << 30

ctypedef cnp.int64_t i64


cdef inline bint _in_disk(i64 px, i64 py, i64 ux, i64 uy, i64 vx, i64 vy) nogil:
    return (ux - px) * (vx - px) + (uy - py) * (vy - py) <= 0


def blocked_matrix(vflat, wflat):
    cdef cnp.ndarray[i64, ndim=1] v = np.asarray(vflat, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] w = np.asarray(wflat, dtype=np.int64)
    cdef Py_ssize_t n = v.shape[0] // 2, m = w.shape[0] // 2
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out = np.zeros((n, n), dtype=np.uint8)
    cdef Py_ssize_t i, j, k
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(m):
                    if _in_disk(w[2 * k], w[2 * k + 1], v[2 * i], v[2 * i + 1], v[2 * j], v[2 * j + 1]):
                        out[i, j] = 1
                        out[j, i] = 1
                        break
    return out.astype(bool).tolist()


cdef Py_ssize_t _mismatch(i64[:] xs, i64[:] ys, cnp.int8_t[:] side,
                          cnp.int8_t[:, :] target) nogil:
    cdef Py_ssize_t n = xs.shape[0], i, j, k, bad = 0
    cdef bint blocked
    for i in range(n):
        for j in range(i + 1, n):
            if side[i] != side[j]:
                continue
            blocked = False
            for k in range(n):
                if side[k] == side[i]:
                    continue
                if _in_disk(xs[k], ys[k], xs[i], ys[i], xs[j], ys[j]):
                    blocked = True
                    break
            if blocked == (target[i, j] != 0):
                bad += 1
    return bad


cdef bint _collides(i64[:] xs, i64[:] ys, Py_ssize_t idx, i64 x, i64 y) nogil:
    cdef Py_ssize_t k
    for k in range(xs.shape[0]):
        if k != idx and xs[k] == x and ys[k] == y:
            return True
    return False


cdef bint _has_duplicates(i64[:] xs, i64[:] ys) nogil:
    cdef Py_ssize_t i, j, n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j] and ys[i] == ys[j]:
                return True
    return False


def mismatch_count(xs, ys, side, target):
    cdef i64[:] x = np.ascontiguousarray(xs, dtype=np.int64)
    cdef i64[:] y = np.ascontiguousarray(ys, dtype=np.int64)
    cdef cnp.int8_t[:] s = np.ascontiguousarray(side, dtype=np.int8)
    cdef cnp.int8_t[:, :] t = np.ascontiguousarray(target, dtype=np.int8)
    return _mismatch(x, y, s, t)


def random_chunk(i64[:, :] coords, cnp.int8_t[:] side, cnp.int8_t[:, :] target, Py_ssize_t best):
    """Score each row (x0, y0, x1, y1, ...) of ``coords``; stop at the first perfect row.

    Returns (best_row or -1, best_mismatch, rows_consumed).
    """
    cdef Py_ssize_t rows = coords.shape[0], n = coords.shape[1] // 2
    cdef Py_ssize_t r, i, mis, best_row = -1, consumed = rows
    cdef i64[:] xs = np.empty(n, dtype=np.int64)
    cdef i64[:] ys = np.empty(n, dtype=np.int64)
    with nogil:
        for r in range(rows):
            for i in range(n):
                xs[i] = coords[r, 2 * i]
                ys[i] = coords[r, 2 * i + 1]
            if _has_duplicates(xs, ys):
                continue
            mis = _mismatch(xs, ys, side, target)
            if mis < best:
                best = mis
                best_row = r
                if mis == 0:
                    consumed = r + 1
                    break
    return best_row, best, consumed


def anneal_chunk(i64[:] xs, i64[:] ys, cnp.int8_t[:] side, cnp.int8_t[:, :] target,
                 cnp.int64_t[:] idx, cnp.int64_t[:] dx, cnp.int64_t[:] dy,
                 double[:] u, double[:] temps, i64 xlim, i64[:] ylo, i64[:] yhi, Py_ssize_t cur,
                 i64[:] best_xs, i64[:] best_ys, Py_ssize_t best):
    """Metropolis single-vertex moves; ``xs``/``ys`` and ``best_*`` are updated in place.

    Returns (current_mismatch, best_mismatch, steps_consumed).
    """
    cdef Py_ssize_t steps = idx.shape[0], n = xs.shape[0], s, v, k, mis, delta
    cdef Py_ssize_t consumed = steps
    cdef i64 ox, oy, nx, ny
    with nogil:
        for s in range(steps):
            v = idx[s]
            if dx[s] == 0 and dy[s] == 0:
                continue
            nx = xs[v] + dx[s]
            ny = ys[v] + dy[s]
            if nx < -xlim or nx > xlim or ny < ylo[v] or ny > yhi[v]:
                continue
            if _collides(xs, ys, v, nx, ny):
                continue
            ox = xs[v]
            oy = ys[v]
            xs[v] = nx
            ys[v] = ny
            mis = _mismatch(xs, ys, side, target)
            delta = mis - cur
            if delta <= 0 or u[s] < exp(-delta / temps[s]):
                cur = mis
                if mis < best:
                    best = mis
                    for k in range(n):
                        best_xs[k] = xs[k]
                        best_ys[k] = ys[k]
                    if mis == 0:
                        consumed = s + 1
                        break
            else:
                xs[v] = ox
                ys[v] = oy
    return cur, best, consumed


def grid_scan(i64[:] xs, i64[:] ys, cnp.int8_t[:] side, cnp.int8_t[:, :] target,
              Py_ssize_t v, i64 xlim, i64 ylo, i64 yhi, Py_ssize_t max_evals):
    """Try every free grid position for vertex ``v`` in row-major order.

    Leaves ``xs``/``ys`` unchanged; returns (best_x, best_y, best_mismatch, evals).
    The current position wins ties.
    """
    cdef i64 ox = xs[v], oy = ys[v], gx, gy, bx = ox, by = oy
    cdef Py_ssize_t best = _mismatch(xs, ys, side, target), mis, evals = 0
    with nogil:
        gy = ylo
        while gy <= yhi and evals < max_evals:
            gx = -xlim
            while gx <= xlim and evals < max_evals:
                if not (gx == ox and gy == oy) and not _collides(xs, ys, v, gx, gy):
                    xs[v] = gx
                    ys[v] = gy
                    mis = _mismatch(xs, ys, side, target)
                    evals += 1
                    if mis < best:
                        best = mis
                        bx = gx
                        by = gy
                gx += 1
            gy += 1
        xs[v] = ox
        ys[v] = oy
    return bx, by, best, evals

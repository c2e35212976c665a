"""Pure-Python twin of ``_ckernels``; same inputs, same results, much slower."""
import math

import numpy as np

COORD_LIMIT = 1 << 30


def _in_disk(px, py, ux, uy, vx, vy):
    return (ux - px) * (vx - px) + (uy - py) * (vy - py) <= 0


def blocked_matrix(vflat, wflat):
    v = [int(c) for c in vflat]
    w = [int(c) for c in wflat]
    n, m = len(v) // 2, len(w) // 2
    wit = [(w[2 * k], w[2 * k + 1]) for k in range(m)]
    out = [[False] * n for _ in range(n)]
    for i in range(n):
        ux, uy = v[2 * i], v[2 * i + 1]
        for j in range(i + 1, n):
            vx, vy = v[2 * j], v[2 * j + 1]
            if any(_in_disk(px, py, ux, uy, vx, vy) for px, py in wit):
                out[i][j] = out[j][i] = True
    return out


def _mismatch(xs, ys, side, target):
    n = len(xs)
    bad = 0
    for i in range(n):
        si = side[i]
        for j in range(i + 1, n):
            if side[j] != si:
                continue
            blocked = False
            for k in range(n):
                if side[k] != si and _in_disk(xs[k], ys[k], xs[i], ys[i], xs[j], ys[j]):
                    blocked = True
                    break
            if blocked == (target[i][j] != 0):
                bad += 1
    return bad


def _collides(xs, ys, idx, x, y):
    return any(k != idx and xs[k] == x and ys[k] == y for k in range(len(xs)))


def _lists(side, target):
    return [int(s) for s in side], [[int(t) for t in row] for row in np.asarray(target)]


def mismatch_count(xs, ys, side, target):
    side, target = _lists(side, target)
    return _mismatch([int(x) for x in xs], [int(y) for y in ys], side, target)


def random_chunk(coords, side, target, best):
    side, target = _lists(side, target)
    rows = np.asarray(coords).tolist()
    best_row = -1
    for r, row in enumerate(rows):
        xs, ys = row[0::2], row[1::2]
        if len(set(zip(xs, ys))) < len(xs):
            continue
        mis = _mismatch(xs, ys, side, target)
        if mis < best:
            best, best_row = mis, r
            if mis == 0:
                return best_row, best, r + 1
    return best_row, best, len(rows)


def anneal_chunk(xs, ys, side, target, idx, dx, dy, u, temps, xlim, ylo, yhi, cur, best_xs, best_ys, best):
    side, target = _lists(side, target)
    x, y = [int(v) for v in xs], [int(v) for v in ys]
    idx, dx, dy = np.asarray(idx).tolist(), np.asarray(dx).tolist(), np.asarray(dy).tolist()
    u, temps = np.asarray(u).tolist(), np.asarray(temps).tolist()
    ylo, yhi = np.asarray(ylo).tolist(), np.asarray(yhi).tolist()
    steps = len(idx)
    consumed = steps
    for s in range(steps):
        v = idx[s]
        if dx[s] == 0 and dy[s] == 0:
            continue
        nx, ny = x[v] + dx[s], y[v] + dy[s]
        if nx < -xlim or nx > xlim or ny < ylo[v] or ny > yhi[v]:
            continue
        if _collides(x, y, v, nx, ny):
            continue
        ox, oy = x[v], y[v]
        x[v], y[v] = nx, ny
        mis = _mismatch(x, y, side, target)
        delta = mis - cur
        if delta <= 0 or u[s] < math.exp(-delta / temps[s]):
            cur = mis
            if mis < best:
                best = mis
                best_xs[:] = x
                best_ys[:] = y
                if mis == 0:
                    consumed = s + 1
                    break
        else:
            x[v], y[v] = ox, oy
    xs[:] = x
    ys[:] = y
    return cur, best, consumed


def grid_scan(xs, ys, side, target, v, xlim, ylo, yhi, max_evals):
    side, target = _lists(side, target)
    x, y = [int(c) for c in xs], [int(c) for c in ys]
    ox, oy = x[v], y[v]
    best, bx, by = _mismatch(x, y, side, target), ox, oy
    evals = 0
    for gy in range(ylo, yhi + 1):
        if evals >= max_evals:
            break
        for gx in range(-xlim, xlim + 1):
            if evals >= max_evals:
                break
            if (gx == ox and gy == oy) or _collides(x, y, v, gx, gy):
                continue
            x[v], y[v] = gx, gy
            mis = _mismatch(x, y, side, target)
            evals += 1
            if mis < best:
                best, bx, by = mis, gx, gy
    return bx, by, best, evals

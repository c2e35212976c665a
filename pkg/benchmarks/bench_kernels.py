"""Time the compiled kernels against the pure-Python twins on identical inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Each row checks that both backends return the same result before timing.
"""
import argparse
import json
import timeit

import numpy as np

from mwgdraw import kernels


def _problem(n_per_side, bound, seed):
    rng = np.random.default_rng(seed)
    n = 2 * n_per_side
    side = np.array([0] * n_per_side + [1] * n_per_side, dtype=np.int8)
    target = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        for j in range(n):
            if i != j and side[i] == side[j] and (i % 2) != (j % 2):
                target[i, j] = 1
    xs = rng.integers(-bound, bound + 1, n).astype(np.int64)
    ys = np.where(side == 0, rng.integers(1, bound + 1, n), -rng.integers(1, bound + 1, n))
    return xs, ys.astype(np.int64), side, target


def _cases(backend, n_per_side):
    xs, ys, side, target = _problem(n_per_side, 50, 7)
    n = len(xs)
    coords = np.random.default_rng(3).integers(-50, 51, (256, 2 * n)).astype(np.int64)
    verts = np.stack([xs[:n_per_side], ys[:n_per_side]], axis=1).ravel()
    wits = np.stack([xs[n_per_side:], ys[n_per_side:]], axis=1).ravel()
    steps = 2000
    rng = np.random.default_rng(5)
    idx = rng.integers(0, n, steps).astype(np.int64)
    dx = rng.integers(-2, 3, steps).astype(np.int64)
    dy = rng.integers(-2, 3, steps).astype(np.int64)
    u, temps = rng.random(steps), np.linspace(1.5, 0.02, steps)
    ylo = np.where(side == 0, 1, -50).astype(np.int64)
    yhi = np.where(side == 0, 50, -1).astype(np.int64)

    def anneal():
        x, y = xs.copy(), ys.copy()
        bx, by = xs.copy(), ys.copy()
        cur = int(backend.mismatch_count(x, y, side, target))
        return backend.anneal_chunk(x, y, side, target, idx, dx, dy, u, temps, 50, ylo, yhi,
                                    cur, bx, by, cur)

    return {
        "blocked_matrix": lambda: backend.blocked_matrix(verts, wits),
        "mismatch_count": lambda: int(backend.mismatch_count(xs, ys, side, target)),
        "random_chunk(256 rows)": lambda: backend.random_chunk(coords, side, target, n * n),
        "anneal_chunk(2000 steps)": anneal,
        "grid_scan(21x10)": lambda: backend.grid_scan(xs.copy(), ys.copy(), side, target, 0,
                                                        10, 1, 10, 10 ** 6),
    }


def run(repeat, sizes):
    names = kernels.available()
    rows = []
    for n in sizes:
        per = {name: _cases(kernels.load(name), n) for name in names}
        for case in per[names[0]]:
            results = {name: per[name][case]() for name in names}
            same = len({repr(r) for r in results.values()}) == 1
            times = {name: min(timeit.repeat(per[name][case], number=1, repeat=repeat))
                     for name in names}
            row = {"case": case, "vertices_per_side": n, "agree": same,
                   **{f"{name}_s": t for name, t in times.items()}}
            if "cython" in times and "python" in times:
                row["speedup"] = times["python"] / times["cython"]
            rows.append(row)
    return names, rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    names, rows = run(args.repeat, args.sizes)
    if args.json:
        print(json.dumps({"backends": names, "rows": rows}, indent=2))
        return
    print(f"backends: {', '.join(names)} (default: {kernels.BACKEND})")
    for r in rows:
        timing = "  ".join(f"{k[:-2]} {r[k] * 1e3:9.3f} ms" for k in r if k.endswith("_s"))
        speed = f"  x{r['speedup']:.0f}" if "speedup" in r else ""
        print(f"{r['case']:<26} n={r['vertices_per_side']:<3} agree={r['agree']!s:<5} "
              f"{timing}{speed}")


if __name__ == "__main__":
    main()

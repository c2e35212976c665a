"""Randomized and grid search for MWG configurations on a bounded rational grid.

This is an oracle, not a decision procedure: a search that comes back empty
says "not found within budget" and nothing more.

Candidate coordinates are ``k / grid_resolution`` with integer ``k`` and
``|k / grid_resolution| <= coordinate_bound``. The kernels work on the
integer numerators, which is exact because all points share the denominator.
"""
from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .geometry import Point
from .model import (Drawing, GraphSpec, InducedGraph, MwgInstance, induce_mwg, matches_spec,
                    multipartite_classes)

CHUNK = 4096
CYCLE = 20_000
T_START, T_END = 1.5, 0.02


class SearchMode(enum.Enum):
    RANDOM = "RANDOM"
    GRID = "GRID"
    ANNEAL = "ANNEAL"


@dataclass(frozen=True)
class SearchConfig:
    budget: int = 100_000
    seed: int = 0
    grid_resolution: int = 1
    coordinate_bound: int = 6
    mode: SearchMode = SearchMode.ANNEAL
    # gamma0 restricted to y > 0 and gamma1 to y < 0
    separated: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.grid_resolution < 1 or self.coordinate_bound < 1:
            raise ValueError("grid resolution and coordinate bound must be positive")
        if self.coordinate_bound * self.grid_resolution >= kernels.COORD_LIMIT // 4:
            raise ValueError("grid too large for exact int64 evaluation")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if not isinstance(self.mode, SearchMode):
            object.__setattr__(self, "mode", SearchMode(str(self.mode).upper()))

    @property
    def limit(self) -> int:
        return self.coordinate_bound * self.grid_resolution


@dataclass
class SearchStats:
    attempts: int = 0
    best_mismatches: int = 0
    total_pairs: int = 0
    wall_time: float = 0.0
    found: bool = False
    backend: str = kernels.BACKEND
    restarts: int = 0
    rejected: int = 0

    @property
    def best_score(self) -> Fraction:
        if self.total_pairs == 0:
            return Fraction(1)
        return 1 - Fraction(self.best_mismatches, self.total_pairs)

    def as_dict(self) -> dict:
        return {
            "found": self.found,
            "status": "found" if self.found else "not found within budget",
            "attempts": self.attempts,
            "best_score": str(self.best_score),
            "best_mismatches": self.best_mismatches,
            "total_pairs": self.total_pairs,
            "restarts": self.restarts,
            "rejected_candidates": self.rejected,
            "wall_time_s": round(self.wall_time, 6),
            "backend": self.backend,
        }


@dataclass
class SearchResult:
    instance: MwgInstance | None
    stats: SearchStats
    best_candidate: MwgInstance | None = None
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class _Problem:
    n0: int
    n1: int
    side: np.ndarray
    target: np.ndarray
    ylo: np.ndarray
    yhi: np.ndarray
    xlim: int

    @property
    def n(self) -> int:
        return self.n0 + self.n1


def _partition_target(spec: GraphSpec) -> list[int]:
    cls = []
    for idx, size in enumerate(spec.partition_sizes):
        cls.extend([idx] * size)
    return cls


def _problem(edges0, edges1, n0: int, n1: int, cfg: SearchConfig) -> _Problem:
    n = n0 + n1
    side = np.array([0] * n0 + [1] * n1, dtype=np.int8)
    target = np.zeros((n, n), dtype=np.int8)
    for off, edges in ((0, edges0), (n0, edges1)):
        for i, j in edges:
            target[off + i, off + j] = target[off + j, off + i] = 1
    L = cfg.limit
    if cfg.separated:
        ylo = np.array([1] * n0 + [-L] * n1, dtype=np.int64)
        yhi = np.array([L] * n0 + [-1] * n1, dtype=np.int64)
    else:
        ylo = np.full(n, -L, dtype=np.int64)
        yhi = np.full(n, L, dtype=np.int64)
    return _Problem(n0, n1, side, target, ylo, yhi, L)


def _random_config(rng: np.random.Generator, prob: _Problem) -> tuple[np.ndarray, np.ndarray]:
    while True:
        xs = rng.integers(-prob.xlim, prob.xlim + 1, size=prob.n, dtype=np.int64)
        ys = rng.integers(prob.ylo, prob.yhi + 1, dtype=np.int64)
        if len(set(zip(xs.tolist(), ys.tolist()))) == prob.n:
            return xs, ys


def _run_worker(prob: _Problem, cfg: SearchConfig, budget: int, rng: np.random.Generator,
                accept: Callable | None, impl, backend: str):
    stats = SearchStats(backend=backend)
    stats.total_pairs = prob.n0 * (prob.n0 - 1) // 2 + prob.n1 * (prob.n1 - 1) // 2
    stats.best_mismatches = stats.total_pairs + 1
    best_x, best_y = _random_config(rng, prob)
    found = None

    def consider(xs, ys, mis):
        nonlocal best_x, best_y, found
        if mis < stats.best_mismatches:
            stats.best_mismatches = mis
            best_x, best_y = xs.copy(), ys.copy()
        if mis == 0:
            if accept is None or accept(xs, ys):
                found = (xs.copy(), ys.copy())
                return True
            stats.rejected += 1
        return False

    if cfg.mode is SearchMode.RANDOM:
        lo = np.empty(2 * prob.n, dtype=np.int64)
        hi = np.empty(2 * prob.n, dtype=np.int64)
        lo[0::2], hi[0::2] = -prob.xlim, prob.xlim
        lo[1::2], hi[1::2] = prob.ylo, prob.yhi
        while stats.attempts < budget and found is None:
            rows = min(CHUNK, budget - stats.attempts)
            coords = rng.integers(lo, hi + 1, size=(rows, 2 * prob.n), dtype=np.int64)
            start = 0
            while start < rows and found is None:
                r, mis, used = impl.random_chunk(coords[start:], prob.side, prob.target,
                                                 stats.total_pairs + 1)
                stats.attempts += used
                if r >= 0:
                    row = coords[start + r]
                    consider(row[0::2].copy(), row[1::2].copy(), mis)
                start += used

    elif cfg.mode is SearchMode.ANNEAL:
        step = max(1, prob.xlim // 3)
        xs, ys = _random_config(rng, prob)
        cur = impl.mismatch_count(xs, ys, prob.side, prob.target)
        stats.attempts += 1
        consider(xs, ys, cur)
        bx, by = xs.copy(), ys.copy()
        bmis = cur
        cycle = min(CYCLE, budget)
        pos = 0
        while stats.attempts < budget and found is None:
            rows = min(CHUNK, budget - stats.attempts, cycle - pos)
            idx = rng.integers(0, prob.n, size=rows, dtype=np.int64)
            dx = rng.integers(-step, step + 1, size=rows, dtype=np.int64)
            dy = rng.integers(-step, step + 1, size=rows, dtype=np.int64)
            u = rng.random(rows)
            frac = (pos + np.arange(rows)) / max(1, cycle - 1)
            temps = T_START * (T_END / T_START) ** frac
            cur, bmis, used = impl.anneal_chunk(xs, ys, prob.side, prob.target, idx, dx, dy, u, temps,
                                                prob.xlim, prob.ylo, prob.yhi, cur, bx, by, bmis)
            stats.attempts += used
            pos += used
            if bmis == 0 or bmis < stats.best_mismatches:
                if consider(bx, by, bmis):
                    break
                if bmis == 0:
                    pos = cycle  # rejected by the caller's filter: restart
            if pos >= cycle:
                stats.restarts += 1
                pos = 0
                xs, ys = _random_config(rng, prob)
                cur = impl.mismatch_count(xs, ys, prob.side, prob.target)
                stats.attempts += 1
                bx, by, bmis = xs.copy(), ys.copy(), cur
                if consider(bx, by, bmis):
                    break

    else:  # GRID: iterated best response of one vertex over the whole grid
        xs, ys = _random_config(rng, prob)
        cur = impl.mismatch_count(xs, ys, prob.side, prob.target)
        stats.attempts += 1
        stale = 0
        v = 0
        consider(xs, ys, cur)
        while stats.attempts < budget and found is None:
            gx, gy, mis, evals = impl.grid_scan(xs, ys, prob.side, prob.target, v, prob.xlim,
                                                int(prob.ylo[v]), int(prob.yhi[v]),
                                                budget - stats.attempts)
            stats.attempts += max(evals, 1)
            if mis < cur:
                xs[v], ys[v] = gx, gy
                cur = mis
                stale = 0
                if consider(xs, ys, cur):
                    break
                if cur == 0:
                    stale = prob.n
            else:
                stale += 1
            v = (v + 1) % prob.n
            if stale >= prob.n:
                stats.restarts += 1
                xs, ys = _random_config(rng, prob)
                cur = impl.mismatch_count(xs, ys, prob.side, prob.target)
                stats.attempts += 1
                stale = 0
                if consider(xs, ys, cur):
                    break

    if found is not None:
        stats.found = True
        stats.best_mismatches = 0
        return found[0], found[1], best_x, best_y, stats
    return None, None, best_x, best_y, stats


def _to_instance(xs, ys, prob: _Problem, cfg: SearchConfig, specs=(None, None),
                 parts=(None, None), edges=(None, None)) -> MwgInstance:
    res = cfg.grid_resolution
    pts = [Point(Fraction(int(x), res), Fraction(int(y), res)) for x, y in zip(xs, ys)]
    drawings = []
    for s, (lo, hi, prefix) in enumerate(((0, prob.n0, "a"), (prob.n0, prob.n, "b"))):
        labels = [f"{prefix}{i}" for i in range(hi - lo)]
        part = None if parts[s] is None else dict(zip(labels, parts[s]))
        ie = None if edges[s] is None else frozenset(frozenset((labels[i], labels[j])) for i, j in edges[s])
        drawings.append(Drawing(tuple(zip(labels, pts[lo:hi])), intended_spec=specs[s],
                                intended_partition=part, intended_edges=ie))
    return MwgInstance(drawings[0], drawings[1])


def search_graphs(edges0: Sequence[tuple[int, int]], edges1: Sequence[tuple[int, int]],
                  n0: int, n1: int, cfg: SearchConfig,
                  accept: Callable[[MwgInstance], bool] | None = None,
                  specs=(None, None), parts=(None, None), backend: str | None = None) -> SearchResult:
    """Search for a drawing pair inducing exactly the given edge lists.

    ``accept`` may veto exact realizations (used to impose positional
    conditions); vetoed candidates restart the search.
    """
    if n0 < 1 or n1 < 1:
        raise ValueError("both graphs need at least one vertex")
    if n0 + n1 > 16:
        raise ValueError("search is limited to 16 vertices in total")
    backend = backend or kernels.BACKEND
    impl = kernels.load(backend)
    prob = _problem(edges0, edges1, n0, n1, cfg)
    plain_edges = (None, None) if specs != (None, None) else (list(edges0), list(edges1))

    def wrap(xs, ys):
        if accept is None:
            return True
        return accept(_to_instance(xs, ys, prob, cfg, specs, parts, plain_edges))

    t0 = time.perf_counter()
    shares = [cfg.budget // cfg.workers + (1 if w < cfg.budget % cfg.workers else 0)
              for w in range(cfg.workers)]
    rngs = [np.random.default_rng([cfg.seed, w]) for w in range(cfg.workers)]
    jobs = [(prob, cfg, shares[w], rngs[w], wrap if accept else None, impl, backend)
            for w in range(cfg.workers) if shares[w] > 0]
    if len(jobs) == 1:
        outs = [_run_worker(*jobs[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(jobs)) as pool:
            outs = list(pool.map(lambda j: _run_worker(*j), jobs))
    stats = SearchStats(backend=outs[0][4].backend, total_pairs=outs[0][4].total_pairs)
    stats.attempts = sum(o[4].attempts for o in outs)
    stats.restarts = sum(o[4].restarts for o in outs)
    stats.rejected = sum(o[4].rejected for o in outs)
    winner = next((o for o in outs if o[4].found), None)
    best = winner or min(outs, key=lambda o: o[4].best_mismatches)  # first worker wins ties
    stats.best_mismatches = best[4].best_mismatches
    stats.found = winner is not None
    stats.wall_time = time.perf_counter() - t0
    candidate = _to_instance(best[2], best[3], prob, cfg, specs, parts, plain_edges)
    inst = None
    if winner is not None:
        inst = _to_instance(winner[0], winner[1], prob, cfg, specs, parts, plain_edges)
        g0, g1 = induce_mwg(inst)
        want0 = {frozenset((f"a{i}", f"a{j}")) for i, j in edges0}
        want1 = {frozenset((f"b{i}", f"b{j}")) for i, j in edges1}
        if g0.edges != want0 or g1.edges != want1:
            raise AssertionError("kernel reported a realization that exact re-induction rejects")
    return SearchResult(inst, stats, candidate)


def _multipartite_edges(spec: GraphSpec) -> list[tuple[int, int]]:
    cls = _partition_target(spec)
    return [(i, j) for i in range(len(cls)) for j in range(i + 1, len(cls)) if cls[i] != cls[j]]


def search(spec0: GraphSpec, spec1: GraphSpec, cfg: SearchConfig,
           accept: Callable[[MwgInstance], bool] | None = None,
           backend: str | None = None) -> SearchResult:
    """Search for an MWG-drawing of ``<spec0, spec1>``.

    Vertex ``i`` of each side is assigned a fixed class; since positions are
    free this loses no generality.
    """
    if spec0.n + spec1.n > 16:
        raise ValueError("search is limited to 16 vertices in total")
    return search_graphs(_multipartite_edges(spec0), _multipartite_edges(spec1), spec0.n, spec1.n,
                         cfg, accept=accept, specs=(spec0, spec1),
                         parts=(_partition_target(spec0), _partition_target(spec1)), backend=backend)


def _assignment_mismatches(g: InducedGraph, part: dict) -> int:
    labels = g.labels
    bad = 0
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if g.has_edge(a, b) != (part[a] != part[b]):
                bad += 1
    return bad


def _greedy_assignment(g: InducedGraph, spec: GraphSpec) -> dict:
    """Fill classes largest-first from complement components, splitting where needed."""
    classes = multipartite_classes(g)
    if classes is None:
        # not multipartite: fall back to complement components
        nb = g.neighbors()
        seen, classes = set(), []
        for s in g.labels:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                a = stack.pop()
                comp.append(a)
                for b in g.labels:
                    if b not in seen and b != a and b not in nb[a]:
                        seen.add(b)
                        stack.append(b)
            classes.append(comp)
    pool = [l for comp in sorted(classes, key=len, reverse=True) for l in comp]
    part, k = {}, 0
    for idx, size in enumerate(spec.partition_sizes):
        for lbl in pool[k:k + size]:
            part[lbl] = idx
        k += size
    return part


def score(inst: MwgInstance, spec0: GraphSpec, spec1: GraphSpec) -> Fraction:
    """Fraction of same-side vertex pairs whose adjacency agrees with the target specs."""
    graphs = induce_mwg(inst)
    total = bad = 0
    for d, g, spec in zip((inst.gamma0, inst.gamma1), graphs, (spec0, spec1)):
        n = len(g.labels)
        if n != spec.n:
            raise ValueError(f"drawing has {n} vertices, spec {spec} needs {spec.n}")
        total += n * (n - 1) // 2
        if matches_spec(g, spec) is not None:
            continue
        options = [_greedy_assignment(g, spec)]
        if d.intended_partition is not None and d.intended_spec == spec:
            options.append(d.intended_partition)
        bad += min(_assignment_mismatches(g, p) for p in options)
    if total == 0:
        return Fraction(1)
    return 1 - Fraction(bad, total)

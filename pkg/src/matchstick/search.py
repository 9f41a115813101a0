"""Exhaustive maximisation of the edge count over lattice point sets.

This is an oracle for penny graphs only: it searches n-subsets of a bounded
patch of the triangular lattice, so it certifies lower bounds for matchstick
graphs in general and exact maxima for penny graphs.

Translation invariance lets us pin the least chosen point (in ``(b, a)``
order) at the origin; the remaining n - 1 points are drawn from the patch
points that come after it.  Points are added in that order, and each lattice
point has exactly three unit neighbours preceding it, so a partial choice
with k points still to add can gain at most 3k edges.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

from matchstick.bounds import ceil_isqrt, conjectured_max_edges
from matchstick.errors import NonPositive, TooLarge
from matchstick.geometry import UNIT_STEPS, LatticePoint

WORK_LIMIT = 10**8


@dataclass(frozen=True)
class SearchConfig:
    n: int
    radius: int = 3
    prune: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise NonPositive("n", self.n)
        if self.radius < ceil_isqrt(self.n):
            raise ValueError(f"radius must be >= ceil(sqrt(n)) = {ceil_isqrt(self.n)}, got {self.radius}")


def _order_key(p: LatticePoint) -> Tuple[int, int]:
    return (p.b, p.a)


def candidate_points(radius: int) -> List[LatticePoint]:
    """Patch points after the origin, within hexagonal distance ``radius``."""
    pts = [
        LatticePoint(a, b)
        for a in range(-radius, radius + 1)
        for b in range(-radius, radius + 1)
        if LatticePoint(a, b).hex_distance() <= radius
    ]
    origin = _order_key(LatticePoint(0, 0))
    return sorted((p for p in pts if _order_key(p) > origin), key=_order_key)


def estimated_work(cfg: SearchConfig) -> int:
    return comb(len(candidate_points(cfg.radius)), cfg.n - 1)


class _Problem:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.points = candidate_points(cfg.radius)
        index = {p: i for i, p in enumerate(self.points)}
        # earlier[i]: candidate indices preceding i that are unit neighbours;
        # origin_adj[i]: whether i touches the origin
        self.earlier: List[Tuple[int, ...]] = []
        self.origin_adj: List[int] = []
        for i, p in enumerate(self.points):
            nbrs = [index.get(LatticePoint(p.a + da, p.b + db)) for da, db in UNIT_STEPS]
            self.earlier.append(tuple(j for j in nbrs if j is not None and j < i))
            self.origin_adj.append(int(p.norm2() == 1))
        self.ceiling = conjectured_max_edges(cfg.n) if cfg.prune else None

    def branch(self, first: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
        """Best (edges, lexicographically least witness) with ``first`` as the
        second chosen point."""
        need = self.cfg.n - 1
        m = len(self.points)
        prune = self.cfg.prune
        earlier = self.earlier
        origin_adj = self.origin_adj
        best = -1
        best_choice: Optional[Tuple[int, ...]] = None
        chosen = [first]
        in_set = [False] * m
        in_set[first] = True

        def gain(i: int) -> int:
            return origin_adj[i] + sum(1 for j in earlier[i] if in_set[j])

        def dfs(start: int, edges: int) -> bool:
            nonlocal best, best_choice
            left = need - len(chosen)
            if left == 0:
                if edges > best:
                    best, best_choice = edges, tuple(chosen)
                    return self.ceiling is not None and best >= self.ceiling
                return False
            if prune and edges + 3 * left <= best:
                return False
            for i in range(start, m - left + 1):
                chosen.append(i)
                in_set[i] = True
                done = dfs(i + 1, edges + gain(i))
                in_set[i] = False
                chosen.pop()
                if done:
                    return True
            return False

        dfs(first + 1, origin_adj[first])
        return best, best_choice


def _run_branch(args) -> Tuple[int, Optional[Tuple[int, ...]]]:
    cfg, first = args
    return _Problem(cfg).branch(first)


def _merge(results: Sequence[Tuple[int, Optional[Tuple[int, ...]]]]):
    best, witness = -1, None
    for value, choice in results:
        if choice is None:
            continue
        if value > best or (value == best and choice < witness):
            best, witness = value, choice
    return best, witness


def lattice_max_edges(cfg: SearchConfig, workers: int = 1) -> Tuple[int, List[LatticePoint]]:
    """Maximum number of unit-distance pairs among n lattice points.

    The witness is the lexicographically least optimal choice (candidate
    order), independent of ``prune`` and ``workers``.
    """
    work = estimated_work(cfg)
    if work > WORK_LIMIT:
        raise TooLarge(work, WORK_LIMIT)
    origin = LatticePoint(0, 0)
    if cfg.n == 1:
        return 0, [origin]
    problem = _Problem(cfg)
    firsts = range(len(problem.points) - (cfg.n - 2))
    if workers <= 1:
        results = []
        for first in firsts:
            results.append(problem.branch(first))
            # with the ceiling reached, later branches can only tie
            if problem.ceiling is not None and results[-1][0] >= problem.ceiling:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_branch, [(cfg, f) for f in firsts]))
    best, choice = _merge(results)
    return best, [origin] + [problem.points[i] for i in choice]

"""Extremal penny graphs on the triangular lattice.

Points are taken in hexagonal-spiral order: the origin, then ring k = 1, 2, ...
(the 6k lattice points at hexagonal distance k).  Ring k starts at (1, -k),
which touches the last point (0, -(k-1)) of the previous ring, and runs
counterclockwise.  Every prefix of this order attains both the conjectured
maximum edge count and the maximum number of triangular faces; the audit
below checks that claim against the closed forms.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, NamedTuple, Sequence

from matchstick.bounds import ceil_isqrt, conjectured_max_edges
from matchstick.errors import DuplicatePoints, NonPositive
from matchstick.geometry import UNIT_STEPS, LatticePoint
from matchstick.planegraph import EmbeddedGraph, MatchstickGraph, extract_faces, validate


def spiral_points(n: int) -> List[LatticePoint]:
    if n < 1:
        raise NonPositive("n", n)
    points = [LatticePoint(0, 0)]
    k = 1
    while len(points) < n:
        a, b = 0, -k  # ring corner; the ring proper starts one step after it
        for da, db in UNIT_STEPS:
            for _ in range(k):
                a, b = a + da, b + db
                points.append(LatticePoint(a, b))
        k += 1
    return points[:n]


def penny_graph_of(points: Sequence[LatticePoint]) -> MatchstickGraph:
    """Contact graph of unit-diameter pennies centred at ``points``."""
    index = {}
    for i, p in enumerate(points):
        if p in index:
            raise DuplicatePoints(f"points {index[p]} and {i} coincide at {p}")
        index[p] = i
    edges = []
    for i, p in enumerate(points):
        # three of the six directions suffice to see each pair once
        a, b = p
        for da, db in UNIT_STEPS[:3]:
            j = index.get((a + da, b + db))
            if j is not None:
                edges.append((i, j) if i < j else (j, i))
    edges.sort()
    return validate(EmbeddedGraph.from_lattice(points, edges))


class AuditRow(NamedTuple):
    n: int
    edges: int
    triangles: int
    ok: bool


def _audit_one(n: int) -> AuditRow:
    m = penny_graph_of(spiral_points(n))
    triangles = extract_faces(m).f3
    ok = m.e == conjectured_max_edges(n) and triangles == 2 * n + 1 - ceil_isqrt(12 * n - 3)
    return AuditRow(n, m.e, triangles, ok)


def extremality_audit(n_max: int, workers: int = 1) -> List[AuditRow]:
    if n_max < 1:
        raise NonPositive("n_max", n_max)
    ns: Iterable[int] = range(1, n_max + 1)
    if workers <= 1:
        return [_audit_one(n) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_audit_one, ns, chunksize=16))

"""Combinatorial plane structure of a straight-line drawing.

Faces are traced from the rotation system (neighbours sorted by angle), the
outer face is the traced cycle of least signed area, and blocks come from a
cut-vertex decomposition of the abstract graph.  The checks at the bottom of
the module evaluate the structural identities and inequalities that hold for
matchstick graphs; integer identities are exact, angle and area checks are
floating point with stated tolerances.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from matchstick.errors import (
    HasChord,
    NotBiconnected,
    NotConnected,
    PreconditionFailed,
    ValidationError,
)
from matchstick.geometry import (
    DEFAULT_TOLERANCE,
    SQRT3_2,
    LatticePoint,
    PlanePoint,
    Tolerance,
    distance,
    is_unit_length,
    lattice_to_cartesian,
    same_point,
    segments_properly_cross,
    unit_step_index,
)
from matchstick.geometry import UNIT_STEPS

Edge = Tuple[int, int]

ANGLE_RTOL = 1e-6


# ---------------------------------------------------------------------------
# Graph containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddedGraph:
    """Vertices with plane coordinates plus undirected edges, not yet validated.

    Edges are stored as ``(i, j)`` with ``i < j``.  Malformed edge lists
    (self-loops, out-of-range indices, repeated edges) raise ``ValueError``.
    """

    vertices: Tuple[PlanePoint, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        n = len(vertices)
        normalized = []
        seen = set()
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_lattice(cls, points: Iterable[LatticePoint], edges: Iterable[Edge]) -> "EmbeddedGraph":
        return cls(tuple(lattice_to_cartesian(p) for p in points), tuple(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def is_lattice(self) -> bool:
        return all(v.exact is not None for v in self.vertices)


@dataclass(frozen=True)
class NonUnitEdge:
    i: int
    j: int
    length: float
    kind: str = field(default="NonUnitEdge", init=False)

    def __str__(self):
        return f"NonUnitEdge ({self.i}, {self.j}) length={self.length!r}"


@dataclass(frozen=True)
class EdgesCross:
    first: Edge
    second: Edge
    kind: str = field(default="EdgesCross", init=False)

    def __str__(self):
        return f"EdgesCross {self.first} {self.second}"


@dataclass(frozen=True)
class DuplicateVertices:
    i: int
    j: int
    distance: float
    kind: str = field(default="DuplicateVertices", init=False)

    def __str__(self):
        return f"DuplicateVertices ({self.i}, {self.j}) distance={self.distance!r}"


@dataclass(frozen=True)
class MatchstickGraph:
    """An ``EmbeddedGraph`` that passed ``validate`` under ``tol``."""

    graph: EmbeddedGraph
    tol: Tolerance = DEFAULT_TOLERANCE

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def e(self) -> int:
        return self.graph.e

    @property
    def vertices(self) -> Tuple[PlanePoint, ...]:
        return self.graph.vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.graph.edges

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return _adjacency(self.graph.n, self.graph.edges)

    @cached_property
    def rotation(self) -> Tuple[Tuple[int, ...], ...]:
        """Neighbours of each vertex in counterclockwise angular order."""
        verts = self.graph.vertices
        if self.graph.is_lattice:
            return tuple(tuple(w for w in slots if w >= 0) for slots in self.lattice_slots)
        rot = []
        for v, nbrs in enumerate(self.adjacency):
            p = verts[v]
            rot.append(tuple(sorted(nbrs, key=lambda w: _direction_key(p, verts[w]))))
        return tuple(rot)

    @cached_property
    def lattice_slots(self) -> Tuple[Tuple[int, ...], ...]:
        """For lattice graphs: per vertex, the neighbour in each of the six
        unit directions (``UNIT_STEPS`` order) or -1 where there is none."""
        return self._lattice_tables[0]

    @cached_property
    def lattice_masks(self) -> Tuple[int, ...]:
        """For lattice graphs: per vertex, bit k set iff slot k is occupied."""
        return self._lattice_tables[1]

    @cached_property
    def _lattice_tables(self):
        verts = self.graph.vertices
        step = {s: k for k, s in enumerate(UNIT_STEPS)}
        slots = [[-1] * 6 for _ in range(self.graph.n)]
        masks = [0] * self.graph.n
        for i, j in self.graph.edges:
            p, q = verts[i].exact, verts[j].exact
            k = step[(q.a - p.a, q.b - p.b)]  # edges are unit, checked by validate
            r = (k + 3) % 6
            slots[i][k] = j
            slots[j][r] = i
            masks[i] |= 1 << k
            masks[j] |= 1 << r
        return tuple(tuple(row) for row in slots), tuple(masks)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)


def _adjacency(n: int, edges: Sequence[Edge]) -> Tuple[Tuple[int, ...], ...]:
    adj: List[List[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return tuple(tuple(sorted(a)) for a in adj)


def _direction_key(p: PlanePoint, q: PlanePoint) -> float:
    if p.exact is not None and q.exact is not None:
        k = unit_step_index(q.exact - p.exact)
        if k is not None:
            return k * (math.pi / 3.0)
    angle = math.atan2(q.y - p.y, q.x - p.x)
    return angle + 2.0 * math.pi if angle < 0 else angle


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _cells(lo: float, hi: float) -> range:
    return range(math.floor(lo), math.floor(hi) + 1)


def _duplicate_vertices(g: EmbeddedGraph, eps: float) -> List[DuplicateVertices]:
    found = []
    if g.is_lattice:
        first: Dict[LatticePoint, int] = {}
        for i, v in enumerate(g.vertices):
            if v.exact in first:
                found.append(DuplicateVertices(first[v.exact], i, 0.0))
            else:
                first[v.exact] = i
        return found
    grid: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for i, v in enumerate(g.vertices):
        cx, cy = math.floor(v.x), math.floor(v.y)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for j in grid.get((cx + dx, cy + dy), ()):
                    if same_point(g.vertices[j], v, eps):
                        found.append(DuplicateVertices(j, i, distance(g.vertices[j], v)))
        grid[(cx, cy)].append(i)
    found.sort(key=lambda d: (d.i, d.j))
    return found


def _crossing_pairs(g: EmbeddedGraph, tol: Tolerance) -> List[EdgesCross]:
    # Bucket edges by the unit cells their (slightly inflated) bounding boxes
    # cover; only edges sharing a cell can meet.
    eps = tol.eps
    verts = g.vertices
    grid: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for k, (i, j) in enumerate(g.edges):
        p, q = verts[i], verts[j]
        for cx in _cells(min(p.x, q.x) - eps, max(p.x, q.x) + eps):
            for cy in _cells(min(p.y, q.y) - eps, max(p.y, q.y) + eps):
                grid[(cx, cy)].append(k)
    candidates = set()
    for bucket in grid.values():
        for k1, k2 in combinations(bucket, 2):
            candidates.add((k1, k2) if k1 < k2 else (k2, k1))
    found = []
    for k1, k2 in sorted(candidates):
        e1, e2 = g.edges[k1], g.edges[k2]
        s1 = (verts[e1[0]], verts[e1[1]])
        s2 = (verts[e2[0]], verts[e2[1]])
        if segments_properly_cross(s1, s2, tol):
            found.append(EdgesCross(e1, e2))
    return found


def find_violations(g: EmbeddedGraph, tol: Tolerance = DEFAULT_TOLERANCE) -> list:
    violations: list = []
    duplicates = _duplicate_vertices(g, tol.eps)
    violations.extend(duplicates)
    verts = g.vertices
    if g.is_lattice:
        coords = [v.exact for v in verts]
        non_unit = []
        for i, j in g.edges:
            da = coords[j][0] - coords[i][0]
            db = coords[j][1] - coords[i][1]
            if da * da + da * db + db * db != 1:
                non_unit.append(NonUnitEdge(i, j, distance(verts[i], verts[j])))
    else:
        non_unit = [
            NonUnitEdge(i, j, distance(verts[i], verts[j]))
            for i, j in g.edges
            if not is_unit_length(verts[i], verts[j], tol)
        ]
    violations.extend(non_unit)
    # Unit edges between distinct lattice points are edges of the triangular
    # tiling and never cross; skip the geometric scan in that case.
    if not (g.is_lattice and not duplicates and not non_unit):
        violations.extend(_crossing_pairs(g, tol))
    return violations


def validate(g: EmbeddedGraph, tol: Tolerance = DEFAULT_TOLERANCE) -> MatchstickGraph:
    violations = find_violations(g, tol)
    if violations:
        raise ValidationError(violations)
    return MatchstickGraph(g, tol)


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceReport:
    faces: Tuple[Tuple[int, ...], ...]
    areas: Tuple[float, ...]
    outer_face: Optional[int]
    outer_faces: Tuple[int, ...]
    bounded: Tuple[int, ...]
    f_hist: Dict[int, int]
    f3: int
    g: int
    f: int

    def size(self, face_id: int) -> int:
        return len(set(self.faces[face_id]))


def _signed_area(verts: Sequence[PlanePoint], cycle: Sequence[int]) -> float:
    pts = [verts[v] for v in cycle]
    if all(p.exact is not None for p in pts):
        twice = 0
        qa, qb = pts[-1].exact
        for p in pts:
            pa, pb = p.exact
            twice += qa * pb - qb * pa
            qa, qb = pa, pb
        return 0.5 * twice * SQRT3_2
    twice = 0.0
    for k, p in enumerate(pts):
        q = pts[(k + 1) % len(pts)]
        twice += p.x * q.y - p.y * q.x
    return 0.5 * twice


def _trace(m: MatchstickGraph) -> Tuple[List[Tuple[int, ...]], List[float]]:
    """Face walks and their signed areas.

    Darts are numbered so that dart ``offset[u] + k`` runs from u to
    ``rotation[u][k]``.  The successor of dart (u, v) is (v, w) with w the
    neighbour of v that comes clockwise-next after u, so bounded faces are
    walked with the face on the left (counterclockwise).
    """
    if m.graph.is_lattice:
        return _trace_lattice(m)
    rot = m.rotation
    n = m.n
    offset = [0] * (n + 1)
    for u in range(n):
        offset[u + 1] = offset[u] + len(rot[u])
    position = [{w: k for k, w in enumerate(nbrs)} for nbrs in rot]
    tail = [0] * offset[n]
    succ = [0] * offset[n]
    verts = m.vertices
    lattice = m.graph.is_lattice
    if lattice:
        xs = [v.exact.a for v in verts]
        ys = [v.exact.b for v in verts]
    else:
        xs = [v.x for v in verts]
        ys = [v.y for v in verts]
    cross = [0] * offset[n]
    for u in range(n):
        base = offset[u]
        xu, yu = xs[u], ys[u]
        for k, v in enumerate(rot[u]):
            d = base + k
            tail[d] = u
            j = position[v][u] - 1
            if j < 0:
                j += len(rot[v])
            succ[d] = offset[v] + j
            cross[d] = xu * ys[v] - yu * xs[v]
    scale = 0.5 * SQRT3_2 if lattice else 0.5
    seen = [False] * offset[n]
    faces = []
    areas = []
    for start in range(offset[n]):
        if seen[start]:
            continue
        cycle = []
        twice = 0
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(tail[d])
            twice += cross[d]
            d = succ[d]
        faces.append(tuple(cycle))
        areas.append(scale * twice)
    return faces, areas


def _cw_table() -> Tuple[Tuple[int, ...], ...]:
    # _CW_NEXT[mask][k]: arriving at a vertex along direction k (so the
    # reverse dart has direction k + 3), the first occupied slot clockwise
    # from it; mask has bit j set when slot j holds a neighbour
    table = []
    for mask in range(64):
        row = []
        for k in range(6):
            j = (k + 2) % 6
            for _ in range(6):
                if mask >> j & 1:
                    break
                j = (j + 5) % 6
            row.append(j)
        table.append(tuple(row))
    return tuple(table)


_CW_NEXT = _cw_table()


def _trace_lattice(m: MatchstickGraph) -> Tuple[List[Tuple[int, ...]], List[float]]:
    # Same walk as _trace with darts numbered 6*u + direction.
    slots = m.lattice_slots
    n = m.n
    xs = [v.exact.a for v in m.vertices]
    ys = [v.exact.b for v in m.vertices]
    masks = m.lattice_masks
    succ = [-1] * (6 * n)
    cross = [0] * (6 * n)
    for u in range(n):
        row = slots[u]
        xu, yu = xs[u], ys[u]
        for k in range(6):
            v = row[k]
            if v < 0:
                continue
            d = 6 * u + k
            succ[d] = 6 * v + _CW_NEXT[masks[v]][k]
            cross[d] = xu * ys[v] - yu * xs[v]
    scale = 0.5 * SQRT3_2
    seen = bytearray(6 * n)
    faces = []
    areas = []
    for start in range(6 * n):
        if seen[start] or succ[start] < 0:
            continue
        cycle = []
        push = cycle.append
        twice = 0
        d = start
        while not seen[d]:
            seen[d] = 1
            push(d // 6)
            twice += cross[d]
            d = succ[d]
        faces.append(tuple(cycle))
        areas.append(scale * twice)
    return faces, areas


def trace_faces(m: MatchstickGraph) -> List[Tuple[int, ...]]:
    """All face boundary walks, each as the sequence of dart tails."""
    return _trace(m)[0]


def components(n: int, adjacency: Sequence[Sequence[int]]) -> List[int]:
    """Component label of each vertex (labels in order of first vertex)."""
    label = [-1] * n
    current = 0
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = current
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if label[w] < 0:
                    label[w] = current
                    stack.append(w)
        current += 1
    return label


def is_connected(m: MatchstickGraph) -> bool:
    return m.n > 0 and max(components(m.n, m.adjacency)) == 0


def extract_faces(m: MatchstickGraph) -> FaceReport:
    faces, areas = _trace(m)
    areas = tuple(areas)
    label = components(m.n, m.adjacency)

    # one outer walk per component that has edges: its least signed area
    outer_of: Dict[int, int] = {}
    for fid, cycle in enumerate(faces):
        comp = label[cycle[0]]
        best = outer_of.get(comp)
        if best is None or areas[fid] < areas[best]:
            outer_of[comp] = fid
    outer_faces = tuple(sorted(outer_of.values()))
    outer_face = min(outer_faces, key=lambda fid: (areas[fid], fid)) if outer_faces else None
    outer_set = set(outer_faces)
    bounded = tuple(fid for fid in range(len(faces)) if fid not in outer_set)

    hist = Counter(len(set(faces[fid])) for fid in bounded)
    f_hist = dict(sorted(hist.items()))
    f3 = f_hist.get(3, 0)
    g = sum(c for i, c in f_hist.items() if i >= 4)
    return FaceReport(
        faces=tuple(faces),
        areas=areas,
        outer_face=outer_face,
        outer_faces=outer_faces,
        bounded=bounded,
        f_hist=f_hist,
        f3=f3,
        g=g,
        f=len(bounded),
    )


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: FrozenSet[int]
    blocks: Tuple[FrozenSet[Edge], ...]
    is_connected: bool
    is_biconnected: bool


def blocks(m) -> BlockDecomposition:
    """Cut vertices and biconnected components (iterative Hopcroft-Tarjan).

    Accepts anything with ``n`` and ``edges`` (``MatchstickGraph`` or
    ``EmbeddedGraph``).
    """
    n = m.n
    adj = _adjacency(n, m.edges)
    disc = [-1] * n
    low = [0] * n
    cut = set()
    found: List[FrozenSet[Edge]] = []
    timer = 0
    roots = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        roots += 1
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: List[Edge] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if stack[-1][1] >= 0:
                    cut.add(parent)
                else:
                    root_children += 1
                block = set()
                while True:
                    x, y = edge_stack.pop()
                    block.add((x, y) if x < y else (y, x))
                    if (x, y) == (parent, v):
                        break
                found.append(frozenset(block))
        if root_children > 1:
            cut.add(root)
    connected = n > 0 and roots == 1
    return BlockDecomposition(
        cut_vertices=frozenset(cut),
        blocks=tuple(found),
        is_connected=connected,
        is_biconnected=connected and n >= 3 and not cut,
    )


def _require_connected(m: MatchstickGraph) -> None:
    if not is_connected(m):
        raise NotConnected(f"graph with {m.n} vertices is not connected")


def _require_biconnected(m: MatchstickGraph) -> None:
    if not blocks(m).is_biconnected:
        raise NotBiconnected(f"graph with {m.n} vertices is not 2-connected")


# ---------------------------------------------------------------------------
# Boundary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryProfile:
    cycle: Tuple[int, ...]
    b: int
    b_hist: Dict[int, int]
    g_b: int
    has_chord: bool
    chords: Tuple[Edge, ...]
    area: float

    def angle_count(self) -> int:
        """Number of face angles at boundary vertices, sum of (i-1)*b_i."""
        return sum((i - 1) * c for i, c in self.b_hist.items())


def _profile(m: MatchstickGraph, faces: FaceReport) -> BoundaryProfile:
    outer = faces.faces[faces.outer_face]
    # outer walk runs clockwise; report it counterclockwise
    cycle = (outer[0],) + tuple(reversed(outer[1:]))
    on_boundary = set(cycle)
    b_hist = dict(sorted(Counter(m.degrees[v] for v in cycle).items()))
    g_b = sum(
        1
        for fid in faces.bounded
        if faces.size(fid) >= 4 and on_boundary.intersection(faces.faces[fid])
    )
    position = {v: k for k, v in enumerate(cycle)}
    b = len(cycle)
    chords = []
    for i, j in m.edges:
        if i in position and j in position:
            gap = abs(position[i] - position[j])
            if gap not in (1, b - 1):
                chords.append((i, j))
    return BoundaryProfile(
        cycle=cycle,
        b=b,
        b_hist=b_hist,
        g_b=g_b,
        has_chord=bool(chords),
        chords=tuple(chords),
        area=-faces.areas[faces.outer_face],
    )


def boundary_profile(m: MatchstickGraph, faces: Optional[FaceReport] = None) -> BoundaryProfile:
    _require_biconnected(m)
    return _profile(m, faces if faces is not None else extract_faces(m))


def boundary_angles(m: MatchstickGraph) -> List[float]:
    """Interior angle of the outer polygon at each boundary vertex, in degrees."""
    _require_biconnected(m)
    cycle = boundary_profile(m).cycle
    verts = m.vertices
    b = len(cycle)
    out = []
    for k, v in enumerate(cycle):
        p, q = verts[cycle[k - 1]], verts[cycle[(k + 1) % b]]
        here = verts[v]
        back = _direction_key(here, p)
        ahead = _direction_key(here, q)
        if here.exact is not None and p.exact is not None and q.exact is not None:
            steps = (unit_step_index(p.exact - here.exact) - unit_step_index(q.exact - here.exact)) % 6
            out.append(60.0 * steps)
        else:
            out.append(math.degrees((back - ahead) % (2.0 * math.pi)))
    return out


# ---------------------------------------------------------------------------
# Identity and inequality checks
# ---------------------------------------------------------------------------


def euler_check(m: MatchstickGraph) -> bool:
    _require_connected(m)
    return m.n - m.e + extract_faces(m).f == 1


def double_count_check(m: MatchstickGraph) -> bool:
    _require_biconnected(m)
    faces = extract_faces(m)
    b = len(faces.faces[faces.outer_face])
    excess = sum((i - 3) * c for i, c in faces.f_hist.items() if i >= 4)
    return m.e == 3 * m.n - 3 - b - excess


def inequality_two_check(m: MatchstickGraph) -> bool:
    """Angle-count inequality at the boundary, under the reduced hypotheses.

    Requires a 2-connected graph whose boundary cycle has no chord and whose
    bounded non-triangular faces meet the boundary in at most two vertices,
    adjacent when there are two.  Otherwise ``PreconditionFailed`` names the
    first hypothesis that fails.
    """
    if not blocks(m).is_biconnected:
        raise PreconditionFailed("graph is not 2-connected")
    faces = extract_faces(m)
    prof = _profile(m, faces)
    if prof.has_chord:
        raise PreconditionFailed(f"boundary cycle has chord {prof.chords[0]}")
    position = {v: k for k, v in enumerate(prof.cycle)}
    for fid in faces.bounded:
        if faces.size(fid) < 4:
            continue
        shared = sorted(position[v] for v in set(faces.faces[fid]) if v in position)
        if len(shared) > 2:
            raise PreconditionFailed(f"face {fid} shares {len(shared)} vertices with the boundary")
        if len(shared) == 2 and (shared[1] - shared[0]) not in (1, prof.b - 1):
            raise PreconditionFailed(f"face {fid} meets the boundary in non-adjacent vertices")
    return prof.angle_count() - prof.g_b <= 3 * prof.b - 6


def angle_sum_check(m: MatchstickGraph) -> bool:
    angles = boundary_angles(m)
    target = 180.0 * (len(angles) - 2)
    return abs(sum(angles) - target) <= ANGLE_RTOL * target


def isoperimetric_check(m: MatchstickGraph) -> bool:
    _require_biconnected(m)
    faces = extract_faces(m)
    prof = _profile(m, faces)
    b2 = prof.b * prof.b
    return b2 >= 4.0 * math.pi * prof.area and b2 > math.pi * math.sqrt(3.0) * faces.f3


class PeelResult(NamedTuple):
    graph: EmbeddedGraph
    removed_edges: int
    removed_nontriangular_faces: int


def boundary_peel(m: MatchstickGraph) -> PeelResult:
    """Delete every boundary-cycle vertex with its incident edges.

    ``removed_edges`` is a direct count; on a chord-free boundary it equals
    ``BoundaryProfile.angle_count()``.
    """
    _require_biconnected(m)
    prof = _profile(m, extract_faces(m))
    if prof.has_chord:
        raise HasChord(*prof.chords[0])
    gone = set(prof.cycle)
    keep = [v for v in range(m.n) if v not in gone]
    index = {v: k for k, v in enumerate(keep)}
    kept_edges = []
    removed = 0
    for i, j in m.edges:
        if i in gone or j in gone:
            removed += 1
        else:
            kept_edges.append((index[i], index[j]))
    rest = EmbeddedGraph(tuple(m.vertices[v] for v in keep), tuple(kept_edges))
    return PeelResult(rest, removed, prof.g_b)

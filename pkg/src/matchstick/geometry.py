"""Points, tolerances and the two predicates that define a matchstick drawing.

Two coordinate regimes coexist.  Points on the triangular lattice carry an
exact ``LatticePoint`` and every predicate between two such points is decided
in integer arithmetic.  Imported points only have floating coordinates and are
compared with an explicit ``Tolerance``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

SQRT3_2 = math.sqrt(3.0) / 2.0

# Lattice steps of unit length, in counterclockwise order starting at angle 0.
UNIT_STEPS: Tuple[Tuple[int, int], ...] = (
    (1, 0),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (0, -1),
    (1, -1),
)
_STEP_INDEX = {step: i for i, step in enumerate(UNIT_STEPS)}


class LatticePoint(NamedTuple):
    """Point ``a*(1, 0) + b*(1/2, sqrt(3)/2)`` of the triangular lattice.

    A named tuple, so it hashes and compares like the plain pair ``(a, b)``.
    """

    a: int
    b: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.a - other.a, self.b - other.b)

    def neighbors(self) -> Tuple["LatticePoint", ...]:
        return tuple(LatticePoint(self.a + da, self.b + db) for da, db in UNIT_STEPS)

    def norm2(self) -> int:
        """Squared euclidean length, an exact integer on this lattice."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def hex_distance(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.a + self.b))


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float
    exact: Optional[LatticePoint] = None


@dataclass(frozen=True)
class Tolerance:
    eps: float = 1e-9

    def __post_init__(self):
        if not (0.0 <= self.eps < 0.05):
            raise ValueError(f"tolerance must satisfy 0 <= eps < 0.05, got {self.eps}")


DEFAULT_TOLERANCE = Tolerance()


def lattice_to_cartesian(p: LatticePoint) -> PlanePoint:
    return PlanePoint(p.a + p.b / 2.0, p.b * SQRT3_2, exact=p)


def unit_step_index(delta: LatticePoint) -> Optional[int]:
    """Index into ``UNIT_STEPS`` of ``delta``, or None if not a unit step."""
    return _STEP_INDEX.get((delta.a, delta.b))


def distance(p: PlanePoint, q: PlanePoint) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def is_unit_length(p: PlanePoint, q: PlanePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    if p.exact is not None and q.exact is not None:
        return (q.exact - p.exact).norm2() == 1
    return abs(distance(p, q) - 1.0) <= tol.eps


def orientation(p: PlanePoint, q: PlanePoint, r: PlanePoint, eps: float = 0.0) -> int:
    """Sign of the turn p -> q -> r: +1 left, -1 right, 0 collinear.

    Exact for lattice points (the lattice basis has positive determinant, so
    the sign of the integer determinant is the sign of the cartesian one).
    Otherwise determinants with magnitude <= eps count as collinear.
    """
    if p.exact is not None and q.exact is not None and r.exact is not None:
        u = q.exact - p.exact
        v = r.exact - p.exact
        det = u.a * v.b - u.b * v.a
        return (det > 0) - (det < 0)
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if abs(det) <= eps:
        return 0
    return 1 if det > 0 else -1


def same_point(p: PlanePoint, q: PlanePoint, eps: float = 0.0) -> bool:
    if p.exact is not None and q.exact is not None:
        return p.exact == q.exact
    return distance(p, q) <= eps


def _on_segment(p: PlanePoint, a: PlanePoint, b: PlanePoint, eps: float) -> bool:
    # p is known to be collinear with a, b; test it lies within the closed segment
    if p.exact is not None and a.exact is not None and b.exact is not None:
        return (
            min(a.exact.a, b.exact.a) <= p.exact.a <= max(a.exact.a, b.exact.a)
            and min(a.exact.b, b.exact.b) <= p.exact.b <= max(a.exact.b, b.exact.b)
        )
    return (
        min(a.x, b.x) - eps <= p.x <= max(a.x, b.x) + eps
        and min(a.y, b.y) - eps <= p.y <= max(a.y, b.y) + eps
    )


def segments_properly_cross(
    s1: Tuple[PlanePoint, PlanePoint],
    s2: Tuple[PlanePoint, PlanePoint],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> bool:
    """True iff the closed segments meet somewhere other than a common endpoint.

    Collinear overlap and an endpoint touching the other segment's interior
    both count as crossing.
    """
    p1, p2 = s1
    q1, q2 = s2
    eps = tol.eps

    shared = [(a, b) for a in (p1, p2) for b in (q1, q2) if same_point(a, b, eps)]
    if len(shared) >= 2:
        return True  # same segment twice
    if shared:
        a, b = shared[0]
        p_other = p2 if a is p1 else p1
        q_other = q2 if b is q1 else q1
        if orientation(a, p_other, q_other, eps) != 0:
            return False
        # collinear through the shared endpoint: overlap iff both go the same way
        dx1, dy1 = p_other.x - a.x, p_other.y - a.y
        dx2, dy2 = q_other.x - a.x, q_other.y - a.y
        if a.exact is not None and p_other.exact is not None and q_other.exact is not None:
            u = p_other.exact - a.exact
            v = q_other.exact - a.exact
            return 2 * (u.a * v.a + u.b * v.b) + u.a * v.b + u.b * v.a > 0
        return dx1 * dx2 + dy1 * dy2 > 0

    o1 = orientation(p1, p2, q1, eps)
    o2 = orientation(p1, p2, q2, eps)
    o3 = orientation(q1, q2, p1, eps)
    o4 = orientation(q1, q2, p2, eps)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_segment(q1, p1, p2, eps):
        return True
    if o2 == 0 and _on_segment(q2, p1, p2, eps):
        return True
    if o3 == 0 and _on_segment(p1, q1, q2, eps):
        return True
    if o4 == 0 and _on_segment(p2, q1, q2, eps):
        return True
    return False

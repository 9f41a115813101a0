"""Exact evaluation of the edge and face bounds for matchstick graphs.

Everything involving sqrt(12n - 3) is decided by squaring integers.  The
bound ``3n - c*sqrt(n - 1/4)`` involves pi, so its floor is certified with
interval arithmetic: the floor is reported only when both ends of the
enclosure agree.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, Iterator, List, Optional, Tuple

from mpmath import iv, mp, mpf

from matchstick.errors import AmbiguousFloor, NonPositive, PreconditionFailed

_BASE_PREC = 64
_MAX_PREC = 4096


def ceil_isqrt(m: int) -> int:
    """Smallest k with k*k >= m."""
    if m < 1:
        raise NonPositive("m", m)
    r = isqrt(m)
    return r if r * r == m else r + 1


def floor_bound(m: int) -> int:
    """floor(3m - sqrt(12m - 3)), exact also when 12m - 3 is a square."""
    return 3 * m - ceil_isqrt(12 * m - 3)


def conjectured_max_edges(n: int) -> int:
    if n < 1:
        raise NonPositive("n", n)
    return floor_bound(n)


def thm1_check(n: int, e: int, g: int) -> bool:
    """e <= 3n - sqrt(12n - 3) + g, decided in integers."""
    slack = 3 * n + g - e
    return slack >= 0 and slack * slack >= 12 * n - 3


def thm1_rhs_floor(n: int, g: int) -> int:
    return 3 * n + g - ceil_isqrt(12 * n - 3)


def cor1_max_triangles(n: int) -> int:
    """floor(2n + 1 - sqrt(12n - 3))."""
    if n < 1:
        raise NonPositive("n", n)
    return 2 * n + 1 - ceil_isqrt(12 * n - 3)


# ---------------------------------------------------------------------------
# The constant c = (sqrt(12) + sqrt(2*pi*sqrt(3))) / 2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantC:
    value: mpf
    bracket: Tuple[mpf, mpf]


@contextmanager
def _iv_prec(prec: int):
    saved = iv.prec
    iv.prec = prec
    try:
        yield
    finally:
        iv.prec = saved


def _ends(x) -> Tuple[mpf, mpf]:
    """Exact endpoints of an interval (no rounding to the mp context)."""
    lo, hi = x._mpi_
    return mp.make_mpf(lo), mp.make_mpf(hi)


def _c_interval(prec: int):
    with _iv_prec(prec):
        return (iv.sqrt(12) + iv.sqrt(2 * iv.pi * iv.sqrt(3))) / 2


@lru_cache(maxsize=None)
def constant_c(prec: int = 128) -> ConstantC:
    lo, hi = _ends(_c_interval(prec))
    with mp.workprec(prec + 8):
        mid = (lo + hi) / 2
    return ConstantC(value=mid, bracket=(lo, hi))


# float value with a generous error allowance, used as a certified fast path
_C_FLOAT = float(constant_c().value)


def _thm3_interval_floor(n: int) -> Optional[int]:
    prec = _BASE_PREC
    while prec <= _MAX_PREC:
        with _iv_prec(prec):
            c = _c_interval(prec)
            val = 3 * n - c * iv.sqrt(iv.mpf(4 * n - 1) / 4)
        lo, hi = (int(mp.floor(x)) for x in _ends(val))
        if lo == hi:
            return lo
        prec *= 2
    return None


def thm3_max_edges(n: int) -> int:
    """floor(3n - c*sqrt(n - 1/4)), certified; raises AmbiguousFloor otherwise."""
    if n < 1:
        raise NonPositive("n", n)
    # Float evaluation: a handful of correctly rounded operations on values
    # below 3n, so the absolute error is far below 1e-12 * 3n.
    approx = 3 * n - _C_FLOAT * math.sqrt(n - 0.25)
    margin = 1e-9 * max(1.0, 3.0 * n)
    fl = math.floor(approx)
    if approx - fl > margin and fl + 1 - approx > margin:
        return fl
    exact = _thm3_interval_floor(n)
    if exact is None:
        raise AmbiguousFloor(n)
    return exact


def settled_list(n_max: int) -> List[int]:
    """n <= n_max for which the certified upper bound meets the construction."""
    if n_max < 1:
        raise NonPositive("n_max", n_max)
    return [n for n in range(1, n_max + 1) if thm3_max_edges(n) == conjectured_max_edges(n)]


# ---------------------------------------------------------------------------
# Square-root lemmas
# ---------------------------------------------------------------------------


def lemma_sqrt_check(alpha, beta, gamma, delta) -> Tuple[bool, bool]:
    """sqrt(beta) + sqrt(gamma) <= sqrt(alpha) + sqrt(delta).

    Arguments are non-negative rationals with beta <= alpha <= gamma and
    alpha + delta == beta + gamma.  Returns ``(holds, equality)``; the
    comparison is exact since with equal sums it reduces to
    alpha*delta >= beta*gamma.
    """
    alpha, beta, gamma, delta = (Fraction(x) for x in (alpha, beta, gamma, delta))
    if min(alpha, beta, gamma, delta) < 0:
        raise PreconditionFailed("arguments must be non-negative")
    if not beta <= alpha <= gamma:
        raise PreconditionFailed("need beta <= alpha <= gamma")
    if alpha + delta != beta + gamma:
        raise PreconditionFailed("need alpha + delta == beta + gamma")
    holds = alpha * delta >= beta * gamma
    equality = alpha in (beta, gamma)
    return holds, equality


def lemma_sqrt2_check(n: int, n1: int, n2: int) -> bool:
    """floor(3n - sqrt(12n-3)) + 1 >= same at n1 plus same at n2."""
    if n1 < 3 or n2 < 3 or n1 + n2 != n + 2:
        raise PreconditionFailed(f"need n1, n2 >= 3 and n1 + n2 == n + 2, got {(n, n1, n2)}")
    return floor_bound(n) + 1 >= floor_bound(n1) + floor_bound(n2)


def lemma_sqrt2_triples(n_max: int) -> Iterator[Tuple[int, int, int]]:
    for n in range(4, n_max + 1):
        for n1 in range(3, n):
            yield n, n1, n + 2 - n1


def lemma_sqrt2_sweep(n_max: int) -> Optional[Tuple[int, int, int]]:
    """First admissible triple with n <= n_max violating the lemma, or None."""
    for triple in lemma_sqrt2_triples(n_max):
        if not lemma_sqrt2_check(*triple):
            return triple
    return None


def inequality_three_check(n: int, b: int) -> bool:
    """sqrt(12n - 3) <= sqrt(12(n - b) - 3) + 6, exact (needs n > b >= 0).

    Squaring both sides reduces it to b - 3 <= sqrt(12(n - b) - 3).
    """
    if not 0 <= b < n:
        raise PreconditionFailed(f"need 0 <= b < n, got n={n}, b={b}")
    if b <= 3:
        return True
    return (b - 3) ** 2 <= 12 * (n - b) - 3


def inequality_three_range(n: int) -> range:
    """Boundary sizes 3 <= b <= sqrt(12n - 3) - 3 used in the induction step."""
    top = isqrt(12 * n - 3) - 3
    return range(3, top + 1)


def constant_inequalities(prec: int = 256) -> Dict[str, bool]:
    """The fixed numeric inequalities used in the proofs, certified by intervals.

    A strict inequality passes when the enclosure of lhs - rhs is positive;
    a non-strict one when it is non-negative.
    """
    with _iv_prec(prec):
        s3 = iv.sqrt(3)
        pi = iv.pi
        c = _c_interval(prec)
        k = pi * s3 + 6 - c * iv.sqrt(2 * pi * s3)
        diffs = {
            "sqrt69+sqrt33-9>5": (iv.sqrt(69) + iv.sqrt(33) - 9 - 5, True),
            "sqrt45-sqrt33<1": (1 - (iv.sqrt(45) - iv.sqrt(33)), True),
            "sqrt5/2-sqrt2+sqrt(3/2)>3/c": (
                iv.sqrt(5) / 2 - iv.sqrt(2) + iv.sqrt(iv.mpf(3) / 2) - 3 / c,
                True,
            ),
            "pi*sqrt3+6-c*sqrt(2*pi*sqrt3)>0": (k, True),
            "(pi*sqrt3+6-c*sqrt(2*pi*sqrt3))*(pi*sqrt3/2+3)>=9-3*pi*sqrt3/2": (
                k * (pi * s3 / 2 + 3) - (9 - 3 * pi * s3 / 2),
                False,
            ),
        }
        return {
            name: bool(_ends(d)[0] > 0) if strict else bool(_ends(d)[0] >= 0)
            for name, (d, strict) in diffs.items()
        }


# ---------------------------------------------------------------------------
# Per-graph report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundsReport:
    n: int
    e: int
    g: int
    f3: int
    conjectured_max: int
    thm1_rhs_floor: int
    thm3_rhs_floor: int
    cor1_max_triangles: int
    verdicts: Dict[str, bool]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "g": self.g,
            "f3": self.f3,
            "conjectured_max": self.conjectured_max,
            "thm1_rhs_floor": self.thm1_rhs_floor,
            "thm3_rhs_floor": self.thm3_rhs_floor,
            "cor1_max_triangles": self.cor1_max_triangles,
            "verdicts": dict(sorted(self.verdicts.items())),
        }


def full_report(m, faces=None) -> BoundsReport:
    from matchstick.planegraph import extract_faces

    if m.n < 1:
        raise NonPositive("n", m.n)
    if faces is None:
        faces = extract_faces(m)
    n, e, g, f3 = m.n, m.e, faces.g, faces.f3
    thm3 = thm3_max_edges(n)
    cor1 = cor1_max_triangles(n)
    verdicts = {
        "edges_conjectured": e <= conjectured_max_edges(n),
        "edges_face_bound": thm1_check(n, e, g),
        "edges_certified": e <= thm3,
        "triangles": f3 <= cor1,
    }
    return BoundsReport(
        n=n,
        e=e,
        g=g,
        f3=f3,
        conjectured_max=conjectured_max_edges(n),
        thm1_rhs_floor=thm1_rhs_floor(n, g),
        thm3_rhs_floor=thm3,
        cor1_max_triangles=cor1,
        verdicts=verdicts,
    )

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from matchstick import bounds
from matchstick.bounds import (
    ceil_isqrt,
    conjectured_max_edges,
    constant_c,
    constant_inequalities,
    cor1_max_triangles,
    full_report,
    inequality_three_check,
    inequality_three_range,
    lemma_sqrt2_check,
    lemma_sqrt2_sweep,
    lemma_sqrt_check,
    settled_list,
    thm1_check,
    thm1_rhs_floor,
    thm3_max_edges,
)
from matchstick.construct import penny_graph_of, spiral_points
from matchstick.errors import NonPositive, PreconditionFailed

SETTLED_130 = list(range(1, 15)) + [
    16, 18, 19, 20, 21, 23, 24, 26, 27, 29, 30, 32, 33, 36, 37, 39, 40, 43, 44, 47,
    48, 51, 52, 55, 56, 60, 61, 65, 69, 70, 74, 75, 79, 80, 85, 90, 91, 96, 102,
    108, 114, 120, 127,
]


def mp_c():
    with mpmath.workdps(60):
        return (mpmath.sqrt(12) + mpmath.sqrt(2 * mpmath.pi * mpmath.sqrt(3))) / 2


def thm3_oracle(n):
    with mpmath.workdps(60):
        return int(mpmath.floor(3 * n - mp_c() * mpmath.sqrt(mpmath.mpf(n) - mpmath.mpf(1) / 4)))


# -- integer square roots -------------------------------------------------------


def test_ceil_isqrt_examples():
    assert ceil_isqrt(9) == 3
    assert ceil_isqrt(45) == 7
    assert ceil_isqrt(12 * 127 - 3) == 39


def test_ceil_isqrt_brute_force():
    k = 0
    for m in range(1, 20001):
        while k * k < m:
            k += 1
        assert ceil_isqrt(m) == k


@given(st.integers(1, 10**60))
def test_ceil_isqrt_property(m):
    k = ceil_isqrt(m)
    assert k * k >= m > (k - 1) ** 2


def test_nonpositive_rejected():
    for f in (ceil_isqrt, conjectured_max_edges, cor1_max_triangles, thm3_max_edges, settled_list):
        with pytest.raises(NonPositive):
            f(0)


# -- closed forms ---------------------------------------------------------------


def test_conjectured_examples():
    assert [conjectured_max_edges(n) for n in (1, 4, 7)] == [0, 5, 12]


def test_conjectured_against_mpmath():
    with mpmath.workdps(40):
        for n in range(1, 3000):
            expect = int(mpmath.floor(3 * n - mpmath.sqrt(12 * n - 3)))
            assert conjectured_max_edges(n) == expect


def test_thm1_examples():
    assert thm1_check(3, 3, 0)
    assert thm1_check(6, 6, 1)
    assert not thm1_check(7, 13, 0)
    # 12*7 - 3 = 81 is a square: equality case
    assert thm1_check(7, 12, 0)
    assert thm1_rhs_floor(7, 0) == 12


@pytest.mark.parametrize("j", [1, 2, 10, 10**6, 10**9, 10**15])
def test_thm1_exact_at_square_discriminant(j):
    # n = 3j^2 + 3j + 1 makes 12n - 3 = (6j + 3)^2; e = 3n - (6j+3) is tight
    n = 3 * j * j + 3 * j + 1
    k = 6 * j + 3
    assert 12 * n - 3 == k * k
    assert thm1_check(n, 3 * n - k, 0)
    assert not thm1_check(n, 3 * n - k + 1, 0)
    assert thm1_check(n, 3 * n - k + 1, 1)


def test_thm1_uses_no_floats(monkeypatch):
    def boom(*_):
        raise AssertionError("float sqrt used")

    monkeypatch.setattr(bounds.math, "sqrt", boom)
    monkeypatch.setattr(mpmath, "sqrt", boom)
    assert thm1_check(7, 12, 0)
    assert not thm1_check(7, 13, 0)


@settings(max_examples=300)
@given(st.integers(1, 10**12), st.integers(0, 3 * 10**12), st.integers(0, 10**6))
def test_thm1_matches_high_precision(n, e, g):
    with mpmath.workdps(80):
        rhs = 3 * n - mpmath.sqrt(12 * n - 3) + g
        assert thm1_check(n, e, g) == (e <= rhs)


def test_cor1_examples():
    assert cor1_max_triangles(3) == 1
    assert cor1_max_triangles(7) == 6
    assert cor1_max_triangles(17) == 20


def test_cor1_brute_force():
    for n in range(1, 2000):
        t = 2 * n + 1
        # largest t with t <= 2n + 1 - sqrt(12n - 3)
        while (2 * n + 1 - t) ** 2 < 12 * n - 3:
            t -= 1
        assert cor1_max_triangles(n) == t


# -- constant c and the certified edge bound ------------------------------------


def test_constant_bracket():
    c = constant_c()
    lo, hi = c.bracket
    assert lo <= c.value <= hi
    assert hi - lo <= mpmath.mpf("1e-12")
    ref = mp_c()
    assert lo <= ref <= hi
    assert mpmath.mpf("3.3815") < lo and hi < mpmath.mpf("3.3816")


def test_thm3_examples():
    assert thm3_max_edges(1) == 0
    assert thm3_max_edges(7) == 12
    assert thm3_max_edges(15) == 32


def test_thm3_against_mpmath():
    for n in range(1, 3001):
        assert thm3_max_edges(n) == thm3_oracle(n)


def test_thm3_interval_path_agrees():
    for n in (1, 7, 15, 127, 1000, 123457):
        assert bounds._thm3_interval_floor(n) == thm3_oracle(n)


def test_settled_examples():
    assert settled_list(14) == list(range(1, 15))
    s = settled_list(130)
    assert 15 not in s and 16 in s
    assert max(s) == 127
    assert s == SETTLED_130


@pytest.mark.slow
def test_bound_ordering_up_to_a_million():
    # conjectured <= thm3 <= 3n - ceil(sqrt(2 pi sqrt3 n)) + C with C = 2
    k = 2 * math.pi * math.sqrt(3)
    worst = -10
    for n in range(1, 10**6 + 1):
        conj = 3 * n - ceil_isqrt(12 * n - 3)
        t3 = thm3_max_edges(n)
        assert conj <= t3, n
        worst = max(worst, t3 - (3 * n - math.ceil(math.sqrt(k * n))))
    assert worst <= 2


# -- lemmas ---------------------------------------------------------------------


def test_lemma_sqrt_examples():
    assert lemma_sqrt_check(9, 9, 33, 33) == (True, True)
    assert lemma_sqrt_check(69, 69, 69, 69) == (True, True)
    assert lemma_sqrt_check(33, 25, 45, 37) == (True, False)


def test_lemma_sqrt_preconditions():
    with pytest.raises(PreconditionFailed):
        lemma_sqrt_check(1, 2, 3, 2)  # beta > alpha
    with pytest.raises(PreconditionFailed):
        lemma_sqrt_check(2, 1, 3, 3)  # sums differ
    with pytest.raises(PreconditionFailed):
        lemma_sqrt_check(-1, -2, 0, 1)


@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_lemma_sqrt_against_mpmath(x, y, z):
    beta, alpha, gamma = sorted((x, y, z))
    delta = beta + gamma - alpha
    holds, eq = lemma_sqrt_check(alpha, beta, gamma, delta)
    with mpmath.workdps(50):
        diff = mpmath.sqrt(alpha) + mpmath.sqrt(delta) - mpmath.sqrt(beta) - mpmath.sqrt(gamma)
    assert holds
    assert eq == (abs(diff) < mpmath.mpf("1e-30"))


def test_lemma_sqrt_accepts_fractions():
    assert lemma_sqrt_check(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 2)) == (True, False)


def test_lemma_sqrt2_examples():
    assert lemma_sqrt2_check(4, 3, 3)
    assert lemma_sqrt2_check(6, 3, 5)
    with pytest.raises(PreconditionFailed):
        lemma_sqrt2_check(6, 2, 6)
    with pytest.raises(PreconditionFailed):
        lemma_sqrt2_check(6, 3, 4)


def test_lemma_sqrt2_sweep_against_mpmath():
    assert lemma_sqrt2_sweep(500) is None
    with mpmath.workdps(40):
        fb = [None] + [int(mpmath.floor(3 * n - mpmath.sqrt(12 * n - 3))) for n in range(1, 201)]
    for n in range(4, 201):
        for n1 in range(3, n):
            assert fb[n] + 1 >= fb[n1] + fb[n + 2 - n1]


def test_inequality_three_sweep():
    for n in range(4, 10**4 + 1):
        for b in inequality_three_range(n):
            assert inequality_three_check(n, b)


def test_inequality_three_against_mpmath():
    with mpmath.workdps(40):
        for n in range(4, 400):
            for b in range(0, n):
                lhs = mpmath.sqrt(12 * n - 3)
                rhs = mpmath.sqrt(12 * (n - b) - 3) + 6 if 12 * (n - b) >= 3 else None
                if rhs is None:
                    continue
                assert inequality_three_check(n, b) == (lhs <= rhs + mpmath.mpf("1e-30"))


def test_inequality_three_range_bounds():
    for n in range(4, 2000):
        r = inequality_three_range(n)
        top = math.floor(math.sqrt(12 * n - 3)) - 3
        assert (r.start, r.stop - 1) == (3, top)


def test_constant_inequalities():
    result = constant_inequalities()
    assert len(result) == 5 and all(result.values())
    with mpmath.workdps(60):
        s3, pi, c = mpmath.sqrt(3), mpmath.pi, mp_c()
        k = pi * s3 + 6 - c * mpmath.sqrt(2 * pi * s3)
        assert mpmath.sqrt(69) + mpmath.sqrt(33) - 9 > 5
        assert mpmath.sqrt(45) - mpmath.sqrt(33) < 1
        assert mpmath.sqrt(5) / 2 - mpmath.sqrt(2) + mpmath.sqrt(mpmath.mpf(3) / 2) > 3 / c
        assert k > 0
        assert k * (pi * s3 / 2 + 3) >= 9 - 3 * pi * s3 / 2


# -- per-graph report -----------------------------------------------------------


def test_full_report_examples():
    tri = full_report(corpus.triangle())
    assert all(tri.verdicts.values())
    assert tri.f3 == 1 == tri.cor1_max_triangles
    s17 = full_report(penny_graph_of(spiral_points(17)))
    assert s17.e == 36 == s17.conjectured_max
    assert all(s17.verdicts.values())
    hexa = full_report(corpus.hexagon())
    assert hexa.g == 1 and hexa.e == 6 <= hexa.thm3_rhs_floor
    assert sorted(hexa.as_dict()) == sorted(
        ["n", "e", "g", "f3", "conjectured_max", "thm1_rhs_floor", "thm3_rhs_floor", "cor1_max_triangles", "verdicts"]
    )

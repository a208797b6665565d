"""Acceptance criteria 1-12, one test per criterion.

Each test prints a single "criterion N: PASS|FAIL" line; the lines are also
collected into the terminal summary by conftest.py.
"""

from __future__ import annotations

import functools
import math
import random
from fractions import Fraction as Fr

import numpy as np

from conftest import ACCEPTANCE_LINES
from riordan_circulant import (
    OEISClient,
    Poly,
    abbreviated_array,
    az_sequences,
    build,
    check_sequence,
    circulant_of,
    classify_linear,
    classify_quadratic,
    closed_form_orbit,
    csum_expansion,
    eigenvalues,
    fourier_matrix,
    head_sums,
    matrix_order,
    orbit,
    orbit_period,
    parse_poly,
    periodic_block,
    periodic_start,
    theorem6_check,
    verify_prop5,
    verify_rogers,
    verify_theorem1,
)
from riordan_circulant.azseq import _unsimplified_z, catalan_table, theorem6_rhs
from riordan_circulant.dynamics import (
    curve_constant_linear,
    curve_exponent_linear,
    rotated_orbit_linear,
)


def criterion(n: int, title: str):
    def deco(f):
        @functools.wraps(f)
        def wrapper(*args, **kwargs):
            try:
                f(*args, **kwargs)
            except BaseException:
                line = f"criterion {n}: FAIL  {title}"
                ACCEPTANCE_LINES.append(line)
                print(line)
                raise
            line = f"criterion {n}: PASS  {title}"
            ACCEPTANCE_LINES.append(line)
            print(line)

        return wrapper

    return deco


def F(s: str) -> Fr:
    return Fr(s)


def rows(text: str) -> list[list[Fr]]:
    return [[F(x) for x in line.split()] for line in text.strip().splitlines()]


GOLDEN_1_5 = rows("""
1 0 0 0 0 0 0
0 1 0 0 0 0 0
1 5 1 0 0 0 0
0 1 10 1 0 0 0
1 5 26 15 1 0 0
0 1 10 76 20 1 0
1 5 26 140 151 25 1
""")

GOLDEN_PER = rows("""
1 0 0 0 0 0 0
0 1/2 0 0 0 0 0
1 -1/2 1/4 0 0 0 0
0 1/2 -1/2 1/8 0 0 0
1 -1/2 1/2 -3/8 1/16 0 0
0 1/2 -1/2 1/2 -1/4 1/32 0
1 -1/2 1/2 -1/2 7/16 -5/32 1/64
""")

GOLDEN_RAP = rows("""
1 0 0 0 0 0
0 -1/3 0 0 0 0
0 2/3 1/9 0 0 0
1 2/3 -4/9 -1/27 0 0
0 -1/3 0 2/9 1/81 0
0 2/3 1 -2/9 -8/81 -1/243
1 2/3 0 -17/27 16/81 10/243
0 -1/3 0 2/3 17/81 -10/81
0 2/3 1 2/3 -64/81 -1/243
1 2/3 0 -1/3 -16/81 130/243
""")

P_1_5 = parse_poly("1,5")
P_PER = parse_poly("1/2,-1/2")
P_RAP = parse_poly("-1/3,2/3,2/3")
GOLDEN = [(P_1_5, GOLDEN_1_5), (P_PER, GOLDEN_PER), (P_RAP, GOLDEN_RAP)]


def random_poly(rng: random.Random, max_deg: int = 4, lo: int = -3, hi: int = 3) -> Poly:
    d = rng.randint(0, max_deg)
    while True:
        c = [rng.randint(lo, hi) for _ in range(d + 1)]
        if c[0] != 0 and c[-1] != 0:
            return Poly(c)


def random_rational(rng: random.Random, bound: int = 2, den: int = 7) -> Fr:
    q = rng.randint(1, den)
    return Fr(rng.randint(-bound * q, bound * q), q)


@criterion(1, "golden matrices reproduced exactly")
def test_criterion_01_golden_matrices():
    for p, gold in GOLDEN:
        arr = build(p, len(gold), len(gold[0]))
        assert [list(r) for r in arr.entries] == gold
    assert build(P_PER, 7, 7).row(6) == tuple(F(x) for x in "1 -1/2 1/2 -1/2 7/16 -5/32 1/64".split())
    rap = build(P_RAP, 10, 6)
    assert rap[6, 3] == Fr(-17, 27)
    assert rap[9, 5] == Fr(130, 243)


@criterion(2, "column periodicity on 100 random (p, k), zero violations")
def test_criterion_02_column_periodicity():
    rng = random.Random(20240101)
    for _ in range(100):
        p = random_poly(rng)
        k = rng.randint(1, 8)
        rep = verify_theorem1(p, k, reps=3)
        d = p.degree
        assert rep.period == d + 1
        assert rep.start == 1 + (k - 1) * (d + 1)


@criterion(3, "orbit point n equals the periodic block of column n+1")
def test_criterion_03_orbit_block_bridge():
    cases = [(p, 6) for p, _ in GOLDEN]
    rng = random.Random(3)
    cases += [(random_poly(rng), 4) for _ in range(30)]
    for p, nmax in cases:
        d = p.degree
        arr = build(p, periodic_start(d, nmax + 1) + d + 1, nmax + 2)
        for n in range(nmax + 1):
            assert orbit(p, n) == periodic_block(arr, n + 1), (p, n)


@criterion(4, "closed-form orbit matches the exact orbit, n <= 20")
def test_criterion_04_closed_form():
    assert np.allclose(closed_form_orbit(P_1_5, 2), [76, 140], rtol=0, atol=1e-9)
    rng = random.Random(4)
    worst = 0.0
    for _ in range(50):
        d = rng.randint(0, 4)
        c = [random_rational(rng) for _ in range(d + 1)]
        if c[0] == 0:
            c[0] = Fr(1)
        if c[-1] == 0:
            c[-1] = Fr(-1)
        p = Poly(c)
        for n in range(21):
            exact = np.array([float(x) for x in orbit(p, n)])
            got = closed_form_orbit(p, n)
            # float64 cannot resolve 1e-9 absolute once entries are large,
            # so the error is measured relative to max(1, |orbit point|)
            scale = max(1.0, float(np.max(np.abs(exact))))
            err = float(np.max(np.abs(got - exact))) / scale
            worst = max(worst, err)
    assert worst < 1e-9, worst


@criterion(5, "Fourier matrix is unitary, symmetric, of order 4 and diagonalizes V")
def test_criterion_05_fourier():
    rng = random.Random(5)
    for n in range(2, 13):
        Fm = fourier_matrix(n)
        I = np.eye(n)
        assert np.max(np.abs(Fm @ Fm.conj().T - I)) < 1e-12
        assert np.array_equal(Fm, Fm.T)
        assert np.max(np.abs(np.linalg.matrix_power(Fm, 4) - I)) < 1e-9
        p = Poly([rng.randint(1, 5)] + [rng.randint(-5, 5) for _ in range(n - 2)] + [rng.randint(1, 5)])
        V = circulant_of(p).to_numpy()
        D = Fm.conj().T @ V @ Fm
        off = D - np.diag(np.diag(D))
        assert np.max(np.abs(off)) < 1e-9
        assert np.max(np.abs(np.diag(D) - eigenvalues(p).values)) < 1e-9


@criterion(6, "linear example: curve exponent, C and points on the curve")
def test_criterion_06_linear_curve():
    a, b = Fr(-4, 11), Fr(6, 11)
    cls = classify_linear(a, b)
    e = cls.diagnostics["curve_exponent"]
    assert math.isclose(e, math.log(2 / 11) / math.log(10 / 11), rel_tol=1e-12)
    C = cls.diagnostics["curve_constant"]
    assert abs(C - 348.05187) < 5e-3
    assert C == curve_constant_linear(a, b) and e == curve_exponent_linear(a, b)
    for n in range(11):
        x, y = rotated_orbit_linear(a, b, n)
        on_curve = C * abs(x) ** e
        assert abs(abs(y) - on_curve) <= 1e-7 * abs(y), n


@criterion(7, "quadratic table: zscale, cos(theta) and r")
def test_criterion_07_quadratic_table():
    table = [
        ((F("93/100"), F("1/2"), F("-19/50")), Fr(21, 20), -0.947, 1.15659, 2e-4),
        ((F("-1/2"), F("2/5"), F("89/100")), Fr(79, 100), 0.77, 1.2211, 2e-4),
        ((F("9289/10000"), F("487/1000"), F("-2159/10000")), Fr(6, 5), -0.924, 1.0, 5e-3),
    ]
    for (a, b, c), zscale, cos, r, rtol in table:
        diag = classify_quadratic(a, b, c).diagnostics
        assert diag["zscale"] == zscale and isinstance(diag["zscale"], Fr)
        assert abs(diag["cos_theta"] - cos) < 2e-3
        assert abs(diag["r"] - r) < rtol


@criterion(8, "head sums: six-step cycle and the worked examples")
def test_criterion_08_head_sums():
    rep = verify_prop5(3)
    assert rep.passed
    hs = head_sums(P_RAP, range(1, 6 * 4 + 1))
    for k in range(1, 7):
        for n in range(1, 4):
            assert hs[k - 1] == hs[k - 1 + 6 * n]
    assert tuple(hs[:6]) == tuple(Fr(x, 3) for x in (0, -1, -2, -2, -1, 0))
    assert head_sums(P_PER, range(2, 13)) == [Fr((-1) ** k, 4) for k in range(2, 13)]
    assert head_sums(parse_poly("-1/2,-1/2"), range(1, 8)) == [F(x) for x in "0 1/4 -1/2 3/4 -1 5/4 -3/2".split()]
    assert head_sums(parse_poly("2/3,-1/3,2/3"), range(1, 11)) == [F(x) for x in "0 0 1/3 1 5/3 2 2 2 7/3 3".split()]


@criterion(9, "orbit period, matrix order and the abbreviated array's periods")
def test_criterion_09_orders():
    assert orbit_period(P_PER) == 2
    assert matrix_order(P_RAP) == 6
    assert matrix_order(parse_poly("2/3,-1/3,2/3")) == 6
    ab = abbreviated_array(P_RAP, 8, block_reps=3)
    assert (ab.horizontal_period, ab.vertical_period) == (6, 3)
    assert ab.header == (0, 1, 4, 7, 10, 13, 16, 19)


@criterion(10, "A/Z sequences: alpha formulas, expansions, Rogers rules, quotient form of Z")
def test_criterion_10_az():
    rng = random.Random(10)
    for _ in range(20):
        a = random_rational(rng)
        while a == 0:
            a = random_rational(rng)
        b, c = random_rational(rng), random_rational(rng)
        if c == 0:
            c = Fr(1, 2)
        az = az_sequences(Poly([a, b, c]), 6)
        h = az.hbar
        assert h[1] == 1 / a
        assert h[2] == -b / a**3
        assert h[3] == (2 * b**2 - a * c) / a**5
        assert h[4] == 5 * (-b**3 + a * b * c) / a**7
        Z, A = az.Z, az.A
        assert (Z[0], Z[1], Z[2], Z[3], Z[4]) == (0, 0, 1 / a**2, -2 * b / a**4, (5 * b**2 - 2 * a * c) / a**6)
        assert A[0] == a and A[1] == b / a
        assert A[2] == (-b**2 + a * c) / a**3
        assert A[3] == (2 * b**3 - 3 * a * b * c) / a**5
        assert A[4] == (-5 * b**4 + 10 * a * b**2 * c - 2 * a**2 * c**2) / a**7
    for p, gold in GOLDEN:
        assert verify_rogers(p, len(gold)).passed
    rng = random.Random(1010)
    for _ in range(30):
        p = random_poly(rng)
        az = az_sequences(p, 12)
        hbar = p.times_t(13).revert()
        assert _unsimplified_z(p.degree, hbar).truncate(12) == az.hbar**p.degree


@criterion(11, "c-linear coefficients of A(t) and the c-expansion through t^7")
def test_criterion_11_c_linear_coefficients():
    rng = random.Random(11)
    for _ in range(20):
        a = random_rational(rng)
        while a == 0:
            a = random_rational(rng)
        b = random_rational(rng)
        rep = theorem6_check(a, b, 10)
        assert rep.details["values"] == [theorem6_rhs(a, b, n) for n in range(11)]
    vals = theorem6_check(1, 1, 10).details["values"]
    assert vals == [(-1) ** n * math.comb(2 * n + 1, n + 1) for n in range(11)]
    assert vals[:7] == [1, -3, 10, -35, 126, -462, 1716]
    printed = [
        [1], [1], [-1, 1], [2, -3], [-5, 10, -2], [14, -35, 15],
        [-42, 126, -84, 7], [132, -462, 420, -84],
    ]
    A = csum_expansion(8, K=4)
    for n, want in enumerate(printed):
        assert list(A[n].coeffs) == want + [0] * (4 - len(want)), n


@criterion(12, "OEIS fixtures: A001700, A088218, A002740, A000108 offline")
def test_criterion_12_oeis():
    client = OEISClient(offline=True)
    t6 = [int(v) for v in theorem6_check(1, 1, 10).details["values"]]
    for sid in ("A001700", "A088218"):
        rep = check_sequence(t6, sid, client=client)
        assert rep.ok and rep.sign_stripped and rep.source == "fixture", rep
    A = csum_expansion(12, K=3)
    c2 = [int(A[n][2]) for n in range(4, 12)]
    assert [abs(x) for x in c2[:4]] == [2, 15, 84, 420]
    assert check_sequence(c2, "A002740", client=client).ok
    assert check_sequence(catalan_table(20), "A000108", client=client).ok


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))

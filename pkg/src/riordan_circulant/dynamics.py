"""Qualitative dynamics of the coefficient orbit for linear and quadratic p.

The orbit is studied in coordinates rotated so that the all-ones eigenvector
of V_p lies on the last axis.  In those coordinates V_p becomes diag(b-a, a+b)
for p = a + bt, and a scaling-rotation block plus an axial scaling for
p = a + bt + ct^2.  Rotated quantities are doubles; every one of them can be
cross-checked against the exact orbit from :mod:`riordan_circulant.circulant`.

Also here: horizontal periodicity across columns, i.e. the abbreviated
("blocks only") array and the head-sum periodicity for p = (-1 + 2t + 2t^2)/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .circulant import DEFAULT_CAP, iter_orbit, matrix_order, orbit, orbit_period
from .errors import DomainError, TheoremViolation
from .reports import Report, jsonable
from .riordan import check_proper, head_sums
from .series import Poly

__all__ = [
    "OrbitKind",
    "OrbitClassification",
    "AbbreviatedArray",
    "ROTATION_2",
    "ROTATION_3",
    "rotation_matrix",
    "rotated_exact_orbit",
    "rotated_orbit_linear",
    "classify_linear",
    "curve_exponent_linear",
    "curve_constant_linear",
    "linear_curve_points",
    "quadratic_parameters",
    "rotated_orbit_quadratic",
    "classify_quadratic",
    "helix_points",
    "helix_branch",
    "abbreviated_array",
    "PROP5_POLY",
    "PROP5_CYCLE",
    "verify_prop5",
]

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)

# clockwise rotation by pi/4
ROTATION_2 = np.array([[1.0, 1.0], [-1.0, 1.0]]) / SQRT2
ROTATION_3 = np.array(
    [
        [1 / SQRT6, -1 / SQRT2, 1 / SQRT3],
        [1 / SQRT6, 1 / SQRT2, 1 / SQRT3],
        [-math.sqrt(2 / 3), 0.0, 1 / SQRT3],
    ]
)


class OrbitKind(str, Enum):
    FIXED_POINT = "FixedPoint"
    CONVERGES = "ConvergesToPoint"
    ESCAPES = "EscapesToInfinity"
    SPLITS_TWO_LIMITS = "SplitsTwoLimits"
    SPLITS_TWO_BRANCHES = "SplitsTwoUnboundedBranches"
    ON_CYLINDER = "OnCylinder"
    PERIODIC = "PeriodicOrbit"


@dataclass(frozen=True)
class OrbitClassification:
    """Long-run fate of the orbit.

    ``limits`` are limit points in standard coordinates: one for a convergent
    orbit, two (even n, odd n) for an orbit that splits.
    """

    kind: OrbitKind
    limits: tuple = ()
    period: int | None = None
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "limits": [list(map(float, pt)) for pt in self.limits],
            "period": self.period,
            **jsonable(self.diagnostics),
        }


def rotation_matrix(d: int) -> np.ndarray:
    if d == 1:
        return ROTATION_2
    if d == 2:
        return ROTATION_3
    raise DomainError("rotated coordinates are defined for d = 1 and d = 2 only")


def rotated_exact_orbit(p: Poly, n: int) -> np.ndarray:
    """R^-1 V^n a, with V^n a computed exactly and rotated once in floating point."""
    R = rotation_matrix(p.degree)
    return R.T @ np.array([float(x) for x in orbit(p, n)])


# ---------------------------------------------------------------------------
# p = a + bt
# ---------------------------------------------------------------------------


def _pair(a, b) -> tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if a * b == 0:
        raise DomainError("linear dynamics need a*b != 0")
    return a, b


def rotated_orbit_linear(a, b, n: int) -> np.ndarray:
    """(-(b-a)^(n+1), (a+b)^(n+1)) / sqrt(2); powers taken exactly."""
    a, b = _pair(a, b)
    if n < 0:
        raise DomainError("iterate must be >= 0")
    return np.array([-float((b - a) ** (n + 1)), float((a + b) ** (n + 1))]) / SQRT2


def curve_exponent_linear(a, b) -> float:
    """Exponent e of the invariant curve |y| = C |x|^e in rotated coordinates."""
    a, b = _pair(a, b)
    l0, l1 = abs(a + b), abs(b - a)
    if l0 == 0 or l1 == 0 or l1 == 1:
        raise DomainError("curve exponent ln|a+b| / ln|b-a| is undefined")
    return math.log(l0) / math.log(l1)


def curve_constant_linear(a, b) -> float:
    """C with |y| = C |x|^e through every rotated orbit point; C = sqrt(2)^(e - 1).

    Rotated orbit points are (-(b-a)^m, (a+b)^m)/sqrt(2) with m = n+1, and
    |(b-a)^m|^e = |a+b|^m, which pins C independently of n.
    """
    a, b = _pair(a, b)
    l0, l1 = abs(a + b), abs(b - a)
    if not (0 < l0 < 1 and 0 < l1 < 1):
        raise DomainError("curve constant needs 0 < |a+b| < 1 and 0 < |b-a| < 1")
    e = curve_exponent_linear(a, b)
    return SQRT2 ** (e - 1)


def linear_curve_points(a, b, ts: Sequence[float]) -> list[tuple[int, np.ndarray]]:
    """Sample the curve carrying the rotated orbit, one branch per visited quadrant.

    Branch points are (sx |b-a|^t, sy |a+b|^t)/sqrt(2); orbit point n sits on
    the branch with its own sign pair at t = n + 1.  Returns (branch, array of
    rows (t, x, y)).
    """
    a, b = _pair(a, b)
    l0, l1 = a + b, b - a
    ts = np.asarray(ts, dtype=float)
    signs = []
    for m in (1, 2):
        s = (-np.sign(float(l1)) ** m, np.sign(float(l0)) ** m)
        if s not in signs:
            signs.append(s)
    out = []
    for i, (sx, sy) in enumerate(signs):
        x = sx * abs(float(l1)) ** ts / SQRT2
        y = sy * abs(float(l0)) ** ts / SQRT2
        out.append((i, np.column_stack([ts, x, y])))
    return out


def _to_standard_2(pt) -> tuple:
    return tuple(float(v) for v in ROTATION_2 @ np.asarray(pt, dtype=float))


def classify_linear(a, b, cap: int = DEFAULT_CAP) -> OrbitClassification:
    """Classify the orbit of (a, b) under V = [[b, a], [a, b]].

    The eigenvalues are lambda0 = a+b (axis y~) and lambda1 = b-a (axis x~).
    Orbits with both eigenvalues in {-1, 0, 1} are periodic and are detected by
    exact comparison first; the remaining cases follow the moduli.
    """
    a, b = _pair(a, b)
    p = Poly([a, b])
    l0, l1 = a + b, b - a
    diag: dict = {"lambda0": l0, "lambda1": l1}
    if l0 != 0 and l1 != 0 and abs(l1) != 1:
        diag["curve_exponent"] = curve_exponent_linear(a, b)
    if 0 < abs(l0) < 1 and 0 < abs(l1) < 1:
        diag["curve_constant"] = curve_constant_linear(a, b)

    if l0 in (-1, 0, 1) and l1 in (-1, 0, 1):
        m = orbit_period(p, cap)
        if m == 1:
            return OrbitClassification(OrbitKind.FIXED_POINT, ((float(a), float(b)),), 1, diag)
        return OrbitClassification(OrbitKind.PERIODIC, (), m, diag)

    m0, m1 = abs(l0), abs(l1)
    if m0 < 1 and m1 < 1:
        return OrbitClassification(OrbitKind.CONVERGES, ((0.0, 0.0),), None, diag)
    if max(m0, m1) == 1:
        # exactly one eigenvalue on the unit circle, the other strictly inside
        if l0 in (-1, 1):
            rot = lambda m: (0.0, float(l0) ** m / SQRT2)
        else:
            rot = lambda m: (-(float(l1) ** m) / SQRT2, 0.0)
        if 1 in (l0, l1):
            return OrbitClassification(OrbitKind.CONVERGES, (_to_standard_2(rot(1)),), None, diag)
        # point n carries exponent n+1: even n -> odd power
        limits = (_to_standard_2(rot(1)), _to_standard_2(rot(2)))
        return OrbitClassification(OrbitKind.SPLITS_TWO_LIMITS, limits, None, diag)

    dominant, other = (l0, m1) if m0 > m1 else (l1, m0)
    if m0 != m1 and dominant < -1 and other <= 1:
        kind = OrbitKind.SPLITS_TWO_BRANCHES
    else:
        kind = OrbitKind.ESCAPES
    if 1 in (l0, l1):
        diag["invariant_line"] = "y~ = 1/sqrt(2)" if l0 == 1 else "x~ = -1/sqrt(2)"
    return OrbitClassification(kind, (), None, diag)


# ---------------------------------------------------------------------------
# p = a + bt + ct^2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticParameters:
    zsum: Fraction  # a+b+c, the axial eigenvalue
    r_squared: Fraction  # a^2+b^2+c^2-ab-ac-bc
    r: float
    cos_theta: float | None
    sin_theta: float | None

    @property
    def zscale(self) -> Fraction:
        return abs(self.zsum)

    @property
    def theta(self) -> float | None:
        if self.cos_theta is None:
            return None
        return math.atan2(self.sin_theta, self.cos_theta)


def quadratic_parameters(a, b, c) -> QuadraticParameters:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    r2 = a * a + b * b + c * c - a * b - a * c - b * c
    r = math.sqrt(r2)
    if r2 == 0:
        return QuadraticParameters(a + b + c, r2, 0.0, None, None)
    cos_t = float(2 * c - a - b) / (2 * r)
    sin_t = SQRT3 * float(b - a) / (2 * r)
    return QuadraticParameters(a + b + c, r2, r, cos_t, sin_t)


def _rotation_block(a, b, c) -> np.ndarray:
    a, b, c = float(a), float(b), float(c)
    u = (2 * c - a - b) / 2
    w = (b - a) * SQRT3 / 2
    return np.array([[u, w, 0.0], [-w, u, 0.0], [0.0, 0.0, a + b + c]])


def rotated_orbit_quadratic(a, b, c, n: int) -> np.ndarray:
    """V~^n R^-1 (a, b, c) with V~ the scaling-rotation block matrix.

    When a = b = c the planar part vanishes and the point stays on the z~ axis.
    """
    if n < 0:
        raise DomainError("iterate must be >= 0")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    v0 = np.array(
        [float(a + b - 2 * c) / SQRT6, float(b - a) / SQRT2, float(a + b + c) / SQRT3]
    )
    M = _rotation_block(a, b, c)
    out = np.linalg.matrix_power(M, n) @ v0
    out[2] = float((a + b + c) ** (n + 1)) / SQRT3
    return out


def classify_quadratic(a, b, c, cap: int = DEFAULT_CAP, cylinder_tol: float = 0.0) -> OrbitClassification:
    """Classify the orbit of (a, b, c) under V = circ(c, b, a).

    Axial behavior follows |a+b+c|, planar behavior follows r, and the planar
    orbit is one spiral when cos(theta) >= 0 and two opposite spirals otherwise.
    Comparisons with 1 are exact; ``cylinder_tol`` widens the r = 1 case for
    data entered to a few decimals.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    check_proper(Poly([a, b, c]))
    p = Poly([a, b, c])
    q = quadratic_parameters(a, b, c)
    zscale = q.zscale
    z_beh = "escapes" if zscale > 1 else ("converges" if zscale < 1 else "stays")
    diag: dict = {
        "zscale": zscale,
        "z_behavior": z_beh,
        "r": q.r,
        "r_squared": q.r_squared,
        "cos_theta": q.cos_theta,
        "theta": q.theta,
    }
    third = Fraction(1, 3)

    if q.r_squared == 0:
        diag.update(planar_behavior="none", spirals=0)
        if zscale < 1:
            return OrbitClassification(OrbitKind.CONVERGES, ((0.0, 0.0, 0.0),), None, diag)
        if zscale > 1:
            return OrbitClassification(OrbitKind.ESCAPES, (), None, diag)
        if q.zsum == 1:
            return OrbitClassification(OrbitKind.FIXED_POINT, ((float(a),) * 3,), 1, diag)
        return OrbitClassification(OrbitKind.PERIODIC, (), 2, diag)

    if q.r_squared == 1 or abs(q.r - 1) <= cylinder_tol:
        planar = "cylinder"
    else:
        planar = "contracts" if q.r_squared < 1 else "unbounded"
    spirals = 2 if 2 * c - a - b < 0 else 1
    diag.update(planar_behavior=planar, spirals=spirals)

    if zscale == 1 and q.r_squared == 1:
        m = orbit_period(p, cap)
        if m is not None:
            return OrbitClassification(OrbitKind.PERIODIC, (), m, diag)
        return OrbitClassification(OrbitKind.ON_CYLINDER, (), None, diag)
    if zscale > 1 or planar == "unbounded":
        return OrbitClassification(OrbitKind.ESCAPES, (), None, diag)
    if planar == "cylinder":
        return OrbitClassification(OrbitKind.ON_CYLINDER, (), None, diag)
    if zscale < 1:
        return OrbitClassification(OrbitKind.CONVERGES, ((0.0, 0.0, 0.0),), None, diag)
    # |a+b+c| = 1 and r < 1: the planar part dies, the axial part is (a+b+c)^(n+1)
    if q.zsum == 1:
        return OrbitClassification(OrbitKind.CONVERGES, ((float(third),) * 3,), None, diag)
    limits = ((-float(third),) * 3, (float(third),) * 3)  # even n, odd n
    return OrbitClassification(OrbitKind.SPLITS_TWO_LIMITS, limits, None, diag)


def helix_points(a, b, c, ts: Sequence[float]) -> list[np.ndarray]:
    """Sample the helical curve(s) carrying the rotated orbit.

    Returns one (len(ts), 3) array per branch.  With cos(theta) >= 0 there is
    one branch and orbit point n lies on it at t = n.  With cos(theta) < 0 the
    curves use theta - pi, so the rotation per step is by an angle with
    positive cosine; even n lie on branch 0 and odd n on the planar mirror,
    branch 1.  For a+b+c < 0 the axial coordinate is Re((a+b+c)^(t+1))/sqrt(3).
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    q = quadratic_parameters(a, b, c)
    if q.r_squared == 0:
        raise DomainError("a = b = c: the orbit has no planar part")
    ts = np.asarray(ts, dtype=float)
    theta = q.theta
    two = q.cos_theta < 0
    if two:
        theta = theta - math.pi
    u = float(a + b - 2 * c)
    w = SQRT3 * float(b - a)
    rt = q.r**ts
    x = rt * (u * np.cos(theta * ts) + w * np.sin(theta * ts)) / SQRT6
    y = rt * (-u * np.sin(theta * ts) + w * np.cos(theta * ts)) / SQRT6
    s = float(q.zsum)
    if s >= 0:
        z = s ** (ts + 1) / SQRT3
    else:
        z = abs(s) ** (ts + 1) * np.cos(np.pi * (ts + 1)) / SQRT3
    branches = [np.column_stack([x, y, z])]
    if two:
        branches.append(np.column_stack([-x, -y, z]))
    return branches


def helix_branch(a, b, c, n: int) -> int:
    """Index of the helix branch that carries orbit point n."""
    q = quadratic_parameters(a, b, c)
    return n % 2 if q.cos_theta is not None and q.cos_theta < 0 else 0


# ---------------------------------------------------------------------------
# horizontal periodicity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbbreviatedArray:
    """Array reduced to its periodic blocks.

    ``header[k]`` is the number of entries dropped from column k before its
    block starts (1 + (d+1)(k-1) for k >= 1, 0 for the geometric column).
    ``blocks[k]`` is the periodic block of column k; ``depth`` rows of blocks
    are laid out by :meth:`matrix`.
    """

    p: Poly
    header: tuple
    blocks: tuple
    horizontal_period: int | None
    vertical_period: int
    depth: int

    def matrix(self) -> list[tuple]:
        n = self.p.degree + 1
        body = [tuple(blk[r % n] for blk in self.blocks) for r in range(self.depth)]
        return [self.header] + body


def _cyclic_prime_period(block: tuple) -> int:
    n = len(block)
    return next(q for q in range(1, n + 1) if n % q == 0 and all(block[i] == block[(i + q) % n] for i in range(n)))


def abbreviated_array(p: Poly, cols: int, block_reps: int = 1, cap: int = DEFAULT_CAP) -> AbbreviatedArray:
    """Blocks-only view of the first ``cols`` columns, ``block_reps`` blocks deep.

    The horizontal prime period is the orbit period (None if it exceeds
    ``cap``).  The vertical prime period is the smallest q dividing d+1 for
    which every block of columns 1..cols-1 is q-periodic; the geometric
    column 0 is excluded.
    """
    check_proper(p)
    if cols < 2 or block_reps < 1:
        raise DomainError("need cols >= 2 and block_reps >= 1")
    n = p.degree + 1
    header = (0,) + tuple(1 + n * (k - 1) for k in range(1, cols))
    col0 = (Fraction(1),) + (Fraction(0),) * (n - 1)
    blocks = [col0]
    for _, v in zip(range(1, cols), iter_orbit(p)):
        blocks.append(v)
    vertical = math.lcm(*(_cyclic_prime_period(b) for b in blocks[1:]))
    return AbbreviatedArray(
        p, header, tuple(blocks), orbit_period(p, cap), vertical, block_reps * n
    )


PROP5_POLY = Poly([Fraction(-1, 3), Fraction(2, 3), Fraction(2, 3)])
PROP5_CYCLE = tuple(Fraction(x, 3) for x in (0, -1, -2, -2, -1, 0))


def verify_prop5(n_max: int, p: Poly = PROP5_POLY, cap: int = DEFAULT_CAP) -> Report:
    """Head sums of columns k and k + m*n agree, m the order of V_p.

    For the default p the order must be 6 and the head sums must run through
    0, -1/3, -2/3, -2/3, -1/3, 0.  Other p with V of finite order can be passed
    to test whether the same column-sum periodicity holds for them; in general
    it does not, and the violation is raised.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    m = matrix_order(p, cap)
    if m is None:
        raise DomainError(f"V_p has no finite order <= {cap}; the claim does not apply")
    details = {"p": p, "order": m}
    if p == PROP5_POLY and m != 6:
        report = Report("prop5", False, 1, details, f"V has order {m}, expected 6")
        raise TheoremViolation(report.failure, report)
    kmax = m * (n_max + 1)
    hs = dict(zip(range(1, kmax + 1), head_sums(p, range(1, kmax + 1))))
    details["head_sums"] = [hs[k] for k in range(1, kmax + 1)]
    checks = 0
    for k in range(1, m + 1):
        for n in range(1, n_max + 1):
            checks += 1
            if hs[k] != hs[k + m * n]:
                report = Report("prop5", False, checks, details,
                                f"head_sum({k}) = {hs[k]} != head_sum({k + m * n}) = {hs[k + m * n]}")
                raise TheoremViolation(report.failure, report)
    if p == PROP5_POLY:
        checks += 1
        cycle = tuple(hs[k] for k in range(1, 7))
        if cycle != PROP5_CYCLE:
            report = Report("prop5", False, checks, details, f"head-sum cycle {cycle}")
            raise TheoremViolation(report.failure, report)
    return Report("prop5", True, checks, details)

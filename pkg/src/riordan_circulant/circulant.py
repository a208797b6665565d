"""Circulant matrix of a polynomial, its exact orbit and its DFT spectrum.

V_p is the (d+1) x (d+1) circulant whose first row is (a_d, ..., a_1, a_0) and
whose i-th row is that row rotated right i times.  The orbit
V_p^n (a_0, ..., a_d)^T reproduces the periodic blocks of the Riordan array
column by column.  Everything on the exact side (V, powers, orbits, orders)
uses Fractions; the Fourier side uses complex doubles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterator, Sequence

import numpy as np

from .errors import DiagonalizationError, DomainError, TheoremViolation
from .reports import Report
from .riordan import build, periodic_block, periodic_start
from .series import Poly, parse_rational

__all__ = [
    "CirculantMatrix",
    "EigenData",
    "shift",
    "circulant_of",
    "orbit",
    "iter_orbit",
    "verify_theorem2",
    "roots_of_unity",
    "fourier_matrix",
    "eigenvalues",
    "verify_diagonalization",
    "closed_form_matrix",
    "closed_form_orbit",
    "orbit_period",
    "matrix_order",
]

DEFAULT_CAP = 360


def shift(v: Sequence) -> tuple:
    """Cyclic shift T(v_0, ..., v_{n-1}) = (v_{n-1}, v_0, ..., v_{n-2})."""
    v = tuple(v)
    if not v:
        raise DomainError("cannot shift an empty vector")
    return (v[-1],) + v[:-1]


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    m = [r[:] for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class CirculantMatrix:
    first_row: tuple

    def __post_init__(self):
        if not self.first_row:
            raise DomainError("empty circulant")
        object.__setattr__(self, "first_row", tuple(Fraction(x) for x in self.first_row))

    @property
    def n(self) -> int:
        return len(self.first_row)

    def row(self, i: int) -> tuple:
        r = self.first_row
        s = i % self.n
        return r[self.n - s :] + r[: self.n - s]

    def rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.n)]

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.n:
            raise DomainError(f"vector of length {len(v)} for a {self.n}x{self.n} circulant")
        return tuple(sum(x * y for x, y in zip(r, v)) for r in self.rows())

    def __matmul__(self, other: "CirculantMatrix") -> "CirculantMatrix":
        # product of circulants is circulant; first row is the cyclic convolution
        n = self.n
        a, b = self.first_row, other.first_row
        return CirculantMatrix(
            tuple(sum(a[k] * b[(j - k) % n] for k in range(n)) for j in range(n))
        )

    def power(self, m: int) -> "CirculantMatrix":
        if m < 0:
            raise DomainError("negative power")
        result = CirculantMatrix((1,) + (0,) * (self.n - 1))
        base = self
        while m:
            if m & 1:
                result = result @ base
            m >>= 1
            if m:
                base = base @ base
        return result

    def is_identity(self) -> bool:
        return self.first_row[0] == 1 and not any(self.first_row[1:])

    def trace(self) -> Fraction:
        return self.n * self.first_row[0]

    def det(self) -> Fraction:
        """Exact determinant (common denominator cleared, then Bareiss)."""
        L = reduce(math.lcm, (x.denominator for x in self.first_row), 1)
        ints = [[int(x * L) for x in r] for r in self.rows()]
        return Fraction(_bareiss_det(ints), L**self.n)

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.rows()])

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "first_row": [str(x) for x in self.first_row]})

    @classmethod
    def from_json(cls, text: str) -> "CirculantMatrix":
        obj = json.loads(text)
        m = cls(tuple(parse_rational(x) for x in obj["first_row"]))
        if m.n != obj["n"]:
            raise DomainError("n does not match first_row length")
        return m


def circulant_of(p: Poly) -> CirculantMatrix:
    return CirculantMatrix(tuple(reversed(p.coeffs)))


def iter_orbit(p: Poly) -> Iterator[tuple]:
    """V^0 a, V^1 a, V^2 a, ... for a = (a_0, ..., a_d)."""
    V = circulant_of(p)
    v = tuple(p.coeffs)
    while True:
        yield v
        v = V.apply(v)


def orbit(p: Poly, n: int) -> tuple:
    if n < 0:
        raise DomainError("iterate must be >= 0")
    it = iter_orbit(p)
    for _ in range(n):
        next(it)
    return next(it)


def verify_theorem2(p: Poly, nmax: int) -> Report:
    """Orbit point n equals the periodic block of column n+1, for n <= nmax."""
    if nmax < 1:
        raise DomainError("nmax must be >= 1")
    d = p.degree
    arr = build(p, periodic_start(d, nmax + 1) + d + 1, nmax + 2)
    pairs = []
    for n, v in zip(range(nmax + 1), iter_orbit(p)):
        block = periodic_block(arr, n + 1)
        pairs.append((n, v))
        if v != block:
            report = Report(
                "theorem2",
                False,
                n + 1,
                {"p": p, "orbit": pairs},
                f"n={n}: orbit {v} != block {block}",
            )
            raise TheoremViolation(report.failure, report)
    return Report("theorem2", True, nmax + 1, {"p": p, "orbit": pairs})


# ---------------------------------------------------------------------------
# Fourier side
# ---------------------------------------------------------------------------


def roots_of_unity(n: int) -> np.ndarray:
    """xi^m for m = 0..n-1, xi = exp(2 pi i / n)."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def fourier_matrix(n: int) -> np.ndarray:
    """Unitary DFT matrix F[j, k] = xi^(jk) / sqrt(n).

    Entries are looked up by jk mod n, so F equals its transpose bit for bit.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    j, k = np.indices((n, n))
    return roots_of_unity(n)[(j * k) % n] / np.sqrt(n)


@dataclass(frozen=True)
class EigenData:
    """lambda_k = xi^(dk) p(xi^(-k)), the representer polynomial at xi^k."""

    values: np.ndarray
    lambda0: Fraction  # exact: sum of coefficients

    def __iter__(self):
        return iter(self.values)

    def to_dict(self) -> dict:
        return {
            "lambda0_exact": str(self.lambda0),
            "eigenvalues": [{"re": float(z.real), "im": float(z.imag)} for z in self.values],
        }


def eigenvalues(p: Poly) -> EigenData:
    d = p.degree
    n = d + 1
    xi = roots_of_unity(n)
    coeffs = [float(a) for a in p.coeffs]

    def pf(z):
        acc = 0j
        for a in reversed(coeffs):
            acc = acc * z + a
        return acc

    lam0 = sum(p.coeffs, Fraction(0))
    vals = [complex(float(lam0))]
    vals += [xi[(d * k) % n] * pf(xi[(-k) % n]) for k in range(1, n)]
    return EigenData(np.array(vals, dtype=complex), lam0)


def verify_diagonalization(p: Poly, tol: float = 1e-9) -> Report:
    """F* V F is diagonal with diagonal (lambda_0, ..., lambda_d)."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    V = circulant_of(p).to_numpy()
    F = fourier_matrix(V.shape[0])
    D = F.conj().T @ V @ F
    lam = eigenvalues(p).values
    off = D - np.diag(np.diag(D))
    off_err = float(np.max(np.abs(off))) if off.size else 0.0
    diag_err = float(np.max(np.abs(np.diag(D) - lam)))
    details = {"p": p, "off_diagonal_max": off_err, "diagonal_max_error": diag_err,
               "diagonal": list(np.diag(D))}
    ok = off_err < tol and diag_err < tol
    report = Report("diagonalization", ok, 2, details,
                    None if ok else f"off-diagonal {off_err:.3g}, diagonal error {diag_err:.3g} vs tol {tol}")
    if not ok:
        raise DiagonalizationError(report.failure, report)
    return report


def closed_form_matrix(n: int) -> np.ndarray:
    """F*sqrt(n) with its first row moved to the bottom: row j holds xi^((j+1)k)."""
    j, k = np.indices((n, n))
    return roots_of_unity(n)[((j + 1) * k) % n]


def closed_form_orbit(p: Poly, n: int) -> np.ndarray:
    """V^n a computed as (1/(d+1)) W (lambda_k^(n+1))_k; complex, imaginary part ~ 0."""
    if n < 0:
        raise DomainError("iterate must be >= 0")
    m = p.degree + 1
    lam = eigenvalues(p).values
    return closed_form_matrix(m) @ lam ** (n + 1) / m


# ---------------------------------------------------------------------------
# finite orders
# ---------------------------------------------------------------------------


def orbit_period(p: Poly, cap: int = DEFAULT_CAP) -> int | None:
    """Smallest m <= cap with V^m a = a, compared exactly; None if there is none."""
    if cap < 1:
        raise DomainError("cap must be >= 1")
    it = iter_orbit(p)
    start = next(it)
    for m in range(1, cap + 1):
        if next(it) == start:
            return m
    return None


def matrix_order(p: Poly, cap: int = DEFAULT_CAP) -> int | None:
    """Smallest m <= cap with V^m = I, or None.

    Returns None without iterating when some |lambda_k| is off the unit circle.
    """
    if cap < 1:
        raise DomainError("cap must be >= 1")
    if np.any(np.abs(np.abs(eigenvalues(p).values) - 1) > 1e-9):
        return None
    V = circulant_of(p)
    P = V
    for m in range(1, cap + 1):
        if P.is_identity():
            return m
        P = P @ V
    return None

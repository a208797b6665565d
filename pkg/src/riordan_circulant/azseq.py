"""A- and Z-sequences of the array, and the Catalan numbers inside them.

With hbar the compositional inverse of t p(t), the generating functions are
Z(t) = hbar(t)^d and A(t) = t / hbar(t).  Every entry of the array is then a
fixed linear combination of the row above it:

    C[n+1, k+1] = sum_j A_j C[n, k+j],     C[n+1, 0] = sum_j Z_j C[n, j].

Everything here is exact.  Coefficients may live in Q[c]/(c^K), which is how
the c-dependence of A(t) for p = a + bt + ct^2 is extracted without symbolic
differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, IdentityViolation, TheoremViolation
from .reports import Report
from .riordan import build, check_proper
from .series import ParamPoly, Poly, Series, geometric

__all__ = [
    "AZPair",
    "az_sequences",
    "catalan",
    "catalan_table",
    "verify_catalan_forms",
    "verify_rogers",
    "theorem6_check",
    "theorem6_rhs",
    "csum_expansion",
    "c_coefficient_table",
]


@dataclass(frozen=True)
class AZPair:
    Z: Series
    A: Series
    hbar: Series
    N: int

    def to_dict(self, p: Poly | None = None) -> dict:
        out = {}
        if p is not None:
            from .series import format_poly

            out["p"] = format_poly(p)
        out.update(N=self.N, A=[str(x) for x in self.A.coeffs], Z=[str(x) for x in self.Z.coeffs])
        return out


def _unsimplified_z(d: int, hbar: Series) -> Series:
    """(D(hbar) - D_00) / (hbar D(hbar)) with D = 1/(1 - t^(d+1)) and D_00 = 1."""
    Dh = geometric(d, hbar.order).compose(hbar)
    one = Series.one(Dh.order, like=Dh.coeffs[0])
    num = (Dh - one).div_t()
    den = hbar.div_t() * Dh
    return num * den.recip()


def az_sequences(p: Poly, N: int) -> AZPair:
    """Z, A and hbar of the array of p, each to order N.

    Also rebuilds Z from the unsimplified quotient form and raises
    :class:`IdentityViolation` if the two disagree.
    """
    check_proper(p)
    if N < 2:
        raise DomainError("N must be >= 2")
    d = p.degree
    hbar_ext = p.times_t(N + 1).revert()
    hbar = hbar_ext.truncate(N)
    A = hbar_ext.div_t().recip()
    Z = hbar**d
    Zu = _unsimplified_z(d, hbar_ext)
    if Zu.truncate(N) != Z:
        raise IdentityViolation(f"quotient form of Z disagrees with hbar^d: {Zu} vs {Z}")
    return AZPair(Z, A, hbar, N)


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def catalan_table(m: int) -> list[int]:
    return [catalan(n) for n in range(m + 1)]


def verify_catalan_forms(a, b, N: int) -> Report:
    """Check the Catalan expansions of Z = hbar and A for p = a + bt.

    [t^(n+1)] Z = (-a/b) C_n (-b/a^2)^(n+1),  [t^(n+1)] A = -a C_n (-b/a^2)^(n+1),
    [t^0] A = a, for n = 0 .. N-2.
    """
    a, b = Fraction(a), Fraction(b)
    if a * b == 0:
        raise DomainError("need a*b != 0")
    az = az_sequences(Poly([a, b]), N)
    x = -b / a**2
    checks = 0
    failure = None
    if az.A[0] != a:
        failure = f"[t^0]A = {az.A[0]} != {a}"
    for n in range(N - 1):
        if failure:
            break
        checks += 2
        z_expect = -a / b * catalan(n) * x ** (n + 1)
        a_expect = -a * catalan(n) * x ** (n + 1)
        if az.Z[n + 1] != z_expect:
            failure = f"[t^{n + 1}]Z = {az.Z[n + 1]} != {z_expect}"
        elif az.A[n + 1] != a_expect:
            failure = f"[t^{n + 1}]A = {az.A[n + 1]} != {a_expect}"
    details = {"a": a, "b": b, "Z": az.Z, "A": az.A}
    report = Report("catalan", failure is None, checks + 1, details, failure)
    if failure:
        raise IdentityViolation(failure, report)
    return report


def verify_rogers(p: Poly, rows: int) -> Report:
    """Rebuild every entry of build(p, rows, rows) from the row above it."""
    if rows < 2:
        raise DomainError("rows must be >= 2")
    arr = build(p, rows, rows)
    az = az_sequences(p, rows)
    A, Z = az.A.coeffs, az.Z.coeffs
    C = arr.entries
    checks = 0
    for n in range(rows - 1):
        zero = C[0][0] * 0
        got = sum((Z[j] * C[n][j] for j in range(rows)), zero)
        checks += 1
        if got != C[n + 1][0]:
            msg = f"Z-rule fails at ({n + 1},0): {got} != {C[n + 1][0]}"
            raise IdentityViolation(msg, Report("rogers", False, checks, {"p": p}, msg))
        for k in range(rows - 1):
            got = sum((A[j] * C[n][k + j] for j in range(rows - k)), zero)
            checks += 1
            if got != C[n + 1][k + 1]:
                msg = f"A-rule fails at ({n + 1},{k + 1}): {got} != {C[n + 1][k + 1]}"
                raise IdentityViolation(msg, Report("rogers", False, checks, {"p": p}, msg))
    return Report("rogers", True, checks, {"p": p, "A": az.A, "Z": az.Z})


def theorem6_rhs(a, b, n: int) -> Fraction:
    """(-b)^n / a^(2n+2) * binomial(2n+1, n+1)."""
    a, b = Fraction(a), Fraction(b)
    return (-b) ** n / a ** (2 * n + 2) * comb(2 * n + 1, n + 1)


def theorem6_check(a, b, n_max: int) -> Report:
    """The c-linear part of [t^(n+2)] A(t) for p = a + bt + ct^2, n = 0..n_max.

    Computed over Q[c]/(c^2), where the c^1 component of a coefficient is
    exactly its derivative in c at c = 0.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0:
        raise DomainError("a must be nonzero")
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    c = ParamPoly.gen(2)
    p = Poly([ParamPoly.const(a, 2), ParamPoly.const(b, 2), c])
    A = az_sequences(p, n_max + 3).A
    values = []
    for n in range(n_max + 1):
        got = A[n + 2][1]
        want = theorem6_rhs(a, b, n)
        values.append(got)
        if got != want:
            msg = f"n={n}: c-coefficient {got} != {want}"
            raise TheoremViolation(msg, Report("theorem6", False, n + 1, {"a": a, "b": b, "values": values}, msg))
    return Report("theorem6", True, n_max + 1, {"a": a, "b": b, "values": values})


def csum_expansion(N: int, K: int = 4) -> Series:
    """A(t) for p = 1 + t + ct^2 to order N, coefficients in Q[c]/(c^K)."""
    if N < 2 or K < 1:
        raise DomainError("need N >= 2 and K >= 1")
    p = Poly([ParamPoly.const(1, K), ParamPoly.const(1, K), ParamPoly.gen(K)])
    return az_sequences(p, N).A


def c_coefficient_table(s: Series) -> list[list[Fraction]]:
    """Row n lists the coefficients of c^0, c^1, ... in [t^n] s."""
    return [list(x.coeffs) if isinstance(x, ParamPoly) else [x] for x in s.coeffs]

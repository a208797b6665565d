"""Exact truncated power series over Q and over Q[c]/(c^K).

A :class:`Series` stores the coefficients of t^0 .. t^(N-1) and nothing else;
``N`` is its truncation order.  Every binary operation returns a result whose
order is the minimum of its operands' orders, so a result never claims more
precision than its inputs.  Callers decide N up front.

Coefficients are either :class:`fractions.Fraction` or :class:`ParamPoly`, a
polynomial in a nilpotent parameter ``c`` used to carry exact first (and
higher) order information in ``c`` through series arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    CompositionOrderError,
    DomainError,
    ParseError,
    ReversionDomainError,
    SingularSeriesError,
    TruncationError,
)

__all__ = [
    "ParamPoly",
    "Poly",
    "Series",
    "geometric",
    "parse_rational",
    "format_rational",
    "parse_poly",
    "format_poly",
]

DEFAULT_K = 4

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(token: str) -> Fraction:
    """Parse ``"p/q"`` or an integer.  Decimal notation is rejected.

    >>> parse_rational("-1/3")
    Fraction(-1, 3)
    >>> parse_rational(" 7 ")
    Fraction(7, 1)
    """
    s = token.strip().replace("−", "-")
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not an exact rational: {token!r} (use p/q or an integer)")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}") from None


def format_rational(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# Q[c]/(c^K)
# ---------------------------------------------------------------------------


class ParamPoly:
    """Element of Q[c]/(c^K): a polynomial in ``c`` with all c^j, j >= K, dropped.

    Rationals mix freely with ParamPoly operands and are lifted to constants.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), K: int | None = None):
        cs = [Fraction(x) for x in coeffs]
        if K is None:
            K = len(cs)
        if K < 1:
            raise DomainError("ParamPoly needs K >= 1")
        cs = cs[:K] + [Fraction(0)] * (K - len(cs))
        self._c = tuple(cs)

    @classmethod
    def const(cls, x, K: int = DEFAULT_K) -> "ParamPoly":
        return cls([x], K)

    @classmethod
    def gen(cls, K: int = DEFAULT_K) -> "ParamPoly":
        """The parameter ``c`` itself."""
        return cls([0, 1], K)

    @property
    def K(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, j: int) -> Fraction:
        return self._c[j]

    def _lift(self, other) -> "ParamPoly | None":
        if isinstance(other, ParamPoly):
            if other.K != self.K:
                raise DomainError(f"mixed truncation degrees K={self.K} and K={other.K}")
            return other
        if isinstance(other, Rational):
            return ParamPoly([other], self.K)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ParamPoly([x + y for x, y in zip(self._c, o._c)])

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly([-x for x in self._c])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ParamPoly([x - y for x, y in zip(self._c, o._c)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return ParamPoly([x * other for x in self._c])
        o = self._lift(other)
        if o is None:
            return NotImplemented
        K = self.K
        out = [Fraction(0)] * K
        for i, x in enumerate(self._c):
            if not x:
                continue
            for j in range(K - i):
                y = o._c[j]
                if y:
                    out[i + j] += x * y
        return ParamPoly(out)

    __rmul__ = __mul__

    @property
    def is_unit(self) -> bool:
        return self._c[0] != 0

    def inverse(self) -> "ParamPoly":
        x0 = self._c[0]
        if x0 == 0:
            raise SingularSeriesError(f"{self} is not invertible (zero constant part)")
        # 1/(x0(1+u)) = (1/x0) * sum (-u)^j, u nilpotent
        u = ParamPoly([0] + [x / x0 for x in self._c[1:]])
        acc = ParamPoly.const(1, self.K)
        term = acc
        for _ in range(1, self.K):
            term = term * (-u)
            acc = acc + term
        return acc * (1 / x0)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return ParamPoly([x / other for x in self._c])
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        acc = ParamPoly.const(1, self.K)
        for _ in range(k):
            acc = acc * self
        return acc

    def __bool__(self) -> bool:
        return any(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self._c == other._c
        if isinstance(other, Rational):
            return self._c[0] == other and not any(self._c[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self._c[1:]):
            return hash(self._c[0])
        return hash(self._c)

    def __repr__(self) -> str:
        return f"ParamPoly({[str(x) for x in self._c]})"

    def __str__(self) -> str:
        parts = []
        for j, x in enumerate(self._c):
            if not x:
                continue
            mono = "" if j == 0 else ("c" if j == 1 else f"c^{j}")
            if not mono:
                s = str(x)
            elif x == 1:
                s = mono
            elif x == -1:
                s = "-" + mono
            else:
                s = f"{x}*{mono}" if x.denominator != 1 else f"{x}{mono}"
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out


Scalar = Union[Fraction, ParamPoly]


def _coerce(x) -> Scalar:
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise DomainError(f"exact coefficient required, got {x!r}")
    return Fraction(x)


def _is_unit(x) -> bool:
    return x.is_unit if isinstance(x, ParamPoly) else x != 0


def _inv(x):
    if isinstance(x, ParamPoly):
        return x.inverse()
    return 1 / Fraction(x)


def _zero_like(*xs):
    z = Fraction(0)
    for x in xs:
        z = z + x * 0
    return z


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Polynomial a_0 + a_1 t + ... + a_d t^d with exact coefficients.

    The leading coefficient must be nonzero (the zero polynomial is ``Poly([0])``).
    Trailing zeros are rejected rather than stripped because they would change
    the degree, and with it the period of every derived array.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(_coerce(x) for x in coeffs)
        if not cs:
            raise DomainError("polynomial needs at least one coefficient")
        if len(cs) > 1 and not cs[-1]:
            raise DomainError("leading coefficient a_d must be nonzero")
        self.coeffs = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def to_series(self, N: int) -> "Series":
        z = _zero_like(*self.coeffs)
        cs = list(self.coeffs[:N]) + [z] * max(0, N - len(self.coeffs))
        return Series(cs)

    def times_t(self, N: int) -> "Series":
        """t*p(t) truncated to order N."""
        z = _zero_like(*self.coeffs)
        return Series(([z] + list(self.coeffs) + [z] * N)[:N])


def parse_poly(text: str) -> Poly:
    """Parse ``"a0,a1,...,ad"`` with each token an integer or ``p/q``."""
    tokens = text.split(",")
    if any(not t.strip() for t in tokens):
        raise ParseError(f"empty coefficient in {text!r}")
    return Poly(parse_rational(t) for t in tokens)


def format_poly(p: Poly) -> str:
    return ",".join(str(a) for a in p.coeffs)


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


class Series:
    """Truncated formal power series c_0 + c_1 t + ... + O(t^N)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(_coerce(x) for x in coeffs)
        if not cs:
            raise DomainError("series needs truncation order N >= 1")
        self.coeffs = cs

    # construction -------------------------------------------------------
    @classmethod
    def one(cls, N: int, like=None) -> "Series":
        z = _zero_like(like) if like is not None else Fraction(0)
        return cls([z + 1] + [z] * (N - 1))

    @classmethod
    def t(cls, N: int) -> "Series":
        return cls(([0, 1] + [0] * N)[:N])

    # access -------------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("series coefficient index must be an int")
        if n < 0:
            raise DomainError(f"negative coefficient index {n}")
        if n >= len(self.coeffs):
            raise TruncationError(
                f"[t^{n}] requested from a series known only to O(t^{len(self.coeffs)})"
            )
        return self.coeffs[n]

    coeff = __getitem__

    def truncate(self, N: int) -> "Series":
        if N > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {N}")
        return Series(self.coeffs[:N])

    def _zero(self):
        return self.coeffs[0] * 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self.coeffs)}], N={self.order})"

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(x + y for x, y in zip(self.coeffs[:n], other.coeffs[:n]))

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(x - y for x, y in zip(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self):
        return Series(-x for x in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series(x * other for x in self.coeffs)
        n = min(self.order, other.order)
        f, g = self.coeffs, other.coeffs
        z = _zero_like(f[0], g[0])
        out = [z] * n
        gnz = [(j, g[j]) for j in range(n) if g[j]]
        for i in range(n):
            fi = f[i]
            if not fi:
                continue
            for j, gj in gnz:
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + fi * gj
        return Series(out)

    def __rmul__(self, other):
        return Series(other * x for x in self.coeffs)

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            raise DomainError("use recip() for negative powers")
        result = Series.one(self.order, like=self.coeffs[0])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_t(self) -> "Series":
        """t*f; the order grows by one since [t^0] of the product is known."""
        return Series((self._zero(),) + self.coeffs)

    def div_t(self) -> "Series":
        """f/t for f with zero constant term; the order drops by one."""
        if self.coeffs[0]:
            raise DomainError("div_t needs a zero constant term")
        if self.order < 2:
            raise TruncationError("f/t of an order-1 series carries no information")
        return Series(self.coeffs[1:])

    def recip(self) -> "Series":
        """Multiplicative inverse to the same order."""
        f = self.coeffs
        if not _is_unit(f[0]):
            raise SingularSeriesError(f"constant term {f[0]} is not invertible")
        inv0 = _inv(f[0])
        g = [inv0]
        for n in range(1, len(f)):
            acc = self._zero()
            for j in range(1, n + 1):
                if f[j]:
                    acc = acc + f[j] * g[n - j]
            g.append(-acc * inv0)
        return Series(g)

    def compose(self, g: "Series") -> "Series":
        """f(g(t)) by Horner's rule; g must have zero constant term."""
        if g.coeffs[0]:
            raise CompositionOrderError("inner series must have zero constant term")
        n = min(self.order, g.order)
        g = g.truncate(n)
        z = _zero_like(self.coeffs[0], g.coeffs[0])
        acc = Series([z + self.coeffs[n - 1]] + [z] * (n - 1))
        for j in range(n - 2, -1, -1):
            acc = acc * g
            acc = Series((acc.coeffs[0] + self.coeffs[j],) + acc.coeffs[1:])
        return acc

    def revert(self) -> "Series":
        """Compositional inverse hbar with h(hbar(t)) = hbar(h(t)) = t.

        Solves the triangular system coefficient by coefficient: [t^n] of
        h(hbar) involves alpha_n only through h_1*alpha_n, every other term
        uses alpha_1..alpha_{n-1}.  Powers of hbar are extended one
        coefficient per step, so a polynomial h of degree d+1 costs
        O(N^2 d) ring multiplications.
        """
        h = self.coeffs
        N = len(h)
        if N < 2:
            raise ReversionDomainError("reversion needs truncation order >= 2")
        if h[0]:
            raise ReversionDomainError("h(0) must be 0")
        if not _is_unit(h[1]):
            raise ReversionDomainError(f"h'(0) = {h[1]} is not invertible")
        z = _zero_like(h[0], h[1])
        inv1 = _inv(h[1])
        top = max((j for j in range(N) if h[j]), default=1)
        # powers[j][m] = [t^m] hbar^j, for j = 1..top
        powers = [None] + [[z] * N for _ in range(top)]
        powers[1][1] = inv1
        alpha = powers[1]
        for n in range(2, N):
            for j in range(2, min(n, top) + 1):
                # [t^n] hbar^j = sum_i alpha_i [t^(n-i)] hbar^(j-1); the i = n-j+1
                # term needs alpha_{n-j+1}, already known since j >= 2
                acc = z
                prev = powers[j - 1]
                for i in range(1, n - j + 2):
                    if alpha[i] and prev[n - i]:
                        acc = acc + alpha[i] * prev[n - i]
                powers[j][n] = acc
            rest = z
            for j in range(2, min(n, top) + 1):
                if h[j]:
                    rest = rest + h[j] * powers[j][n]
            alpha[n] = -rest * inv1
        return Series(alpha)


def geometric(d: int, N: int) -> Series:
    """1/(1 - t^(d+1)) to order N."""
    if d < 0 or N < 1:
        raise DomainError("geometric needs d >= 0 and N >= 1")
    return Series(1 if n % (d + 1) == 0 else 0 for n in range(N))

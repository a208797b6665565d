"""The Riordan array (1/(1 - t^(d+1)), t p(t)) and its vertical periodicity.

Column k has generating function (t p(t))^k / (1 - t^(d+1)).  Every column
k >= 1 becomes periodic with period d+1 from row 1 + (k-1)(d+1) on; the d+1
entries starting there form the column's *periodic block*.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ImproperArrayError, TheoremViolation, TruncationError
from .series import Poly, Series, format_poly, geometric, parse_poly, parse_rational

__all__ = [
    "RiordanArray",
    "PeriodReport",
    "check_proper",
    "periodic_start",
    "column_gf",
    "build",
    "periodic_block",
    "verify_theorem1",
    "head_sum",
    "head_sums",
]


def check_proper(p: Poly) -> None:
    if not p[0]:
        raise ImproperArrayError("p(0) = 0: the array would not be a proper Riordan array")


def periodic_start(d: int, k: int) -> int:
    """Row index where column k turns periodic (0 for the geometric column)."""
    if k < 0:
        raise DomainError("column index must be >= 0")
    return 0 if k == 0 else 1 + (k - 1) * (d + 1)


@dataclass(frozen=True)
class RiordanArray:
    p: Poly
    entries: tuple  # entries[i][k] = C_{i,k}

    @property
    def d(self) -> int:
        return self.p.degree

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ik):
        i, k = ik
        if not (0 <= i < self.rows and 0 <= k < self.cols):
            raise TruncationError(f"entry ({i},{k}) outside the built {self.rows}x{self.cols} block")
        return self.entries[i][k]

    def column(self, k: int) -> tuple:
        return tuple(row[k] for row in self.entries)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": format_poly(self.p),
                "rows": self.rows,
                "cols": self.cols,
                "entries": [[str(x) for x in row] for row in self.entries],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "RiordanArray":
        obj = json.loads(text)
        entries = tuple(tuple(parse_rational(x) for x in row) for row in obj["entries"])
        if len(entries) != obj["rows"] or any(len(r) != obj["cols"] for r in entries):
            raise DomainError("entries do not match the declared rows/cols")
        return cls(parse_poly(obj["p"]), entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i"] + [f"k{k}" for k in range(self.cols)])
        for i, row in enumerate(self.entries):
            w.writerow([i] + [str(x) for x in row])
        return buf.getvalue()


@dataclass(frozen=True)
class PeriodReport:
    column: int
    period: int  # d + 1
    start: int
    block: tuple
    prime_period: int
    depth: int  # repetitions of the block that were checked

    def to_dict(self) -> dict:
        return {
            "column": self.column,
            "period": self.period,
            "start": self.start,
            "block": [str(x) for x in self.block],
            "prime_period": self.prime_period,
            "depth": self.depth,
        }


def column_gf(p: Poly, k: int, N: int) -> Series:
    """(t p(t))^k / (1 - t^(d+1)) to order N."""
    check_proper(p)
    if N < 1 or k < 0:
        raise DomainError("column_gf needs N >= 1 and k >= 0")
    return p.times_t(N) ** k * geometric(p.degree, N)


def build(p: Poly, rows: int, cols: int) -> RiordanArray:
    """Top-left rows x cols block of the array.

    Columns are produced by the recurrence col_{k+1} = col_k * t p(t).
    """
    check_proper(p)
    if rows < 1 or cols < 1:
        raise DomainError("rows and cols must be positive")
    tp = p.times_t(rows)
    col = geometric(p.degree, rows)
    columns = []
    for _ in range(cols):
        columns.append(col.coeffs)
        col = col * tp
    entries = tuple(tuple(c[i] for c in columns) for i in range(rows))
    return RiordanArray(p, entries)


def periodic_block(arr: RiordanArray, k: int) -> tuple:
    if k < 1:
        raise DomainError("periodic blocks are defined for columns k >= 1")
    n = arr.d + 1
    start = periodic_start(arr.d, k)
    if arr.rows < start + n or arr.cols <= k:
        raise TruncationError(
            f"column {k} needs {start + n} rows and {k + 1} cols; array is {arr.rows}x{arr.cols}"
        )
    return tuple(arr.entries[i][k] for i in range(start, start + n))


def _divisors(n: int) -> list[int]:
    return [q for q in range(1, n + 1) if n % q == 0]


def verify_theorem1(p: Poly, k: int, reps: int = 3) -> PeriodReport:
    """Check C[s+n, k] = C[s+(d+1)+n, k] for n < reps*(d+1), s the periodic start.

    Raises :class:`TheoremViolation` on the first failing n.
    """
    if reps < 2:
        raise DomainError("reps must be >= 2")
    check_proper(p)
    n = p.degree + 1
    start = periodic_start(p.degree, k)
    N = start + (reps + 1) * n
    col = column_gf(p, k, N).coeffs
    for m in range(reps * n):
        i = start + m
        if col[i] != col[i + n]:
            raise TheoremViolation(
                f"column {k}: C[{i}] = {col[i]} but C[{i + n}] = {col[i + n]}"
            )
    tail = col[start:]
    prime = next(
        q for q in _divisors(n) if all(tail[i] == tail[i + q] for i in range(len(tail) - q))
    )
    return PeriodReport(k, n, start, tuple(col[start : start + n]), prime, reps)


def head_sum(arr: RiordanArray, k: int):
    """Sum of C[i, k] for i = 0 .. (k-1)(d+1): the entries before the periodic tail.

    For d = 1 and d = 2 this is the column sum tabulated for the horizontally
    periodic examples; for other d it uses the same start index.
    """
    if k < 1:
        raise DomainError("head sums are defined for k >= 1")
    last = (k - 1) * (arr.d + 1)
    if arr.rows <= last or arr.cols <= k:
        raise TruncationError(f"head_sum({k}) needs {last + 1} rows and {k + 1} cols")
    return sum((arr.entries[i][k] for i in range(last + 1)), start=arr.entries[0][0] * 0)


def head_sums(p: Poly, ks: Sequence[int]) -> list:
    """Head sums for several columns, building just enough of the array."""
    kmax = max(ks)
    arr = build(p, (kmax - 1) * (p.degree + 1) + 1, kmax + 1)
    return [head_sum(arr, k) for k in ks]

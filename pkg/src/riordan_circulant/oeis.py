"""OEIS b-file parsing and sequence cross-checks.

b-files are fetched from ``OEIS_BASE_URL`` (default https://oeis.org) and
cached under ``OEIS_CACHE_DIR``.  With ``OEIS_OFFLINE=1`` the network is never
touched.  A handful of sequences ship with the package (first 50 terms) so
the checks work without any network at all.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DomainError, OEISUnavailable, ParseError

__all__ = [
    "BFile",
    "MatchReport",
    "OEISClient",
    "parse_bfile",
    "normalize_id",
    "check_sequence",
    "BUNDLED",
]

DEFAULT_BASE_URL = "https://oeis.org"
BUNDLED = ("A000108", "A001700", "A002740", "A088218")

_ID_RE = re.compile(r"^[Aa]?(\d{1,6})$")


def normalize_id(seq_id: str | int) -> str:
    """'A1700', '1700' and 1700 all become 'A001700'."""
    m = _ID_RE.match(str(seq_id).strip())
    if not m:
        raise DomainError(f"not an OEIS A-number: {seq_id!r}")
    return f"A{int(m.group(1)):06d}"


@dataclass(frozen=True)
class BFile:
    seq_id: str
    entries: tuple  # ((index, value), ...), indices strictly increasing
    # (line position, raw text) of comment/blank lines, kept for round trips
    comments: tuple = ()
    trailing_newline: bool = True
    source: str = field(default="", compare=False)

    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def serialize(self) -> str:
        lines: list[str] = []
        notes = dict(self.comments)
        it = iter(self.entries)
        total = len(self.entries) + len(self.comments)
        for pos in range(total):
            if pos in notes:
                lines.append(notes[pos])
            else:
                i, v = next(it)
                lines.append(f"{i} {v}")
        text = "\n".join(lines)
        return text + "\n" if self.trailing_newline and lines else text


def parse_bfile(text: str, seq_id: str = "") -> BFile:
    """Parse "index value" lines; '#' lines and blank lines are skipped."""
    trailing = text.endswith("\n")
    lines = text.split("\n")
    if trailing:
        lines.pop()
    entries, comments = [], []
    last = None
    for pos, line in enumerate(lines):
        s = line.strip()
        if not s or s.startswith("#"):
            comments.append((pos, line))
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'index value', got {s!r}", line=pos + 1)
        try:
            i, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {s!r}", line=pos + 1) from None
        if last is not None and i <= last:
            raise ParseError(f"index {i} does not increase (previous {last})", line=pos + 1)
        last = i
        entries.append((i, v))
    return BFile(seq_id, tuple(entries), tuple(comments), trailing)


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


class OEISClient:
    """Fetch b-files: on-disk cache, then network (unless offline), then bundled copy."""

    def __init__(
        self,
        base_url: str | None = None,
        cache_dir: str | os.PathLike | None = None,
        offline: bool | None = None,
        timeout: float = 10.0,
    ):
        self.base_url = (base_url or os.environ.get("OEIS_BASE_URL") or DEFAULT_BASE_URL).rstrip("/")
        cache = cache_dir or os.environ.get("OEIS_CACHE_DIR")
        self.cache_dir = Path(cache) if cache else Path.home() / ".cache" / "riordan_circulant" / "oeis"
        self.offline = _env_flag("OEIS_OFFLINE") if offline is None else offline
        self.timeout = timeout

    def url(self, seq_id: str) -> str:
        sid = normalize_id(seq_id)
        return f"{self.base_url}/{sid}/b{sid[1:]}.txt"

    def _cache_path(self, sid: str) -> Path:
        return self.cache_dir / f"b{sid[1:]}.txt"

    def _write_cache(self, sid: str, text: str) -> None:
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix=".tmp-", suffix=".txt")
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, self._cache_path(sid))
        except OSError:
            pass  # the cache is an optimization only

    def _download(self, sid: str) -> str:
        with urllib.request.urlopen(self.url(sid), timeout=self.timeout) as resp:
            return resp.read().decode("utf-8")

    @staticmethod
    def bundled_text(sid: str) -> str | None:
        res = resources.files("riordan_circulant") / "data" / "oeis" / f"b{sid[1:]}.txt"
        try:
            return res.read_text()
        except (FileNotFoundError, OSError):
            return None

    def fetch(self, seq_id: str | int) -> BFile:
        sid = normalize_id(seq_id)
        path = self._cache_path(sid)
        if path.is_file():
            bf = parse_bfile(path.read_text(), sid)
            return BFile(bf.seq_id, bf.entries, bf.comments, bf.trailing_newline, "cache")
        error = "offline mode"
        if not self.offline:
            try:
                text = self._download(sid)
            except (urllib.error.URLError, OSError, TimeoutError) as exc:
                error = str(exc)
            else:
                bf = parse_bfile(text, sid)
                self._write_cache(sid, text)
                return BFile(bf.seq_id, bf.entries, bf.comments, bf.trailing_newline, "network")
        text = self.bundled_text(sid)
        if text is None:
            raise OEISUnavailable(f"{sid}: not cached, not bundled, and download failed ({error})")
        bf = parse_bfile(text, sid)
        return BFile(bf.seq_id, bf.entries, bf.comments, bf.trailing_newline, "fixture")


@dataclass(frozen=True)
class MatchReport:
    """Result of aligning library terms with an OEIS sequence.

    ``offset`` counts b-file entries skipped before the first aligned term;
    ``start_index`` is the OEIS index that term lines up with.
    """

    seq_id: str
    terms: tuple
    matched_prefix: int
    offset: int
    start_index: int | None
    verdict: str  # "match" or "mismatch"
    mismatch_position: int | None
    sign_stripped: bool
    source: str

    @property
    def ok(self) -> bool:
        return self.verdict == "match"

    def to_dict(self) -> dict:
        return {
            "seq_id": self.seq_id,
            "terms": list(self.terms),
            "matched_prefix": self.matched_prefix,
            "offset": self.offset,
            "start_index": self.start_index,
            "verdict": self.verdict,
            "mismatch_position": self.mismatch_position,
            "sign_stripped": self.sign_stripped,
            "source": self.source,
        }


def check_sequence(
    terms: Sequence[int],
    seq_id: str | int,
    offsets: Iterable[int] = range(4),
    client: OEISClient | None = None,
) -> MatchReport:
    """Align ``terms`` against the b-file at each offset and report the best fit.

    Signed terms are compared in absolute value when the OEIS sequence has
    no negative entries; the report says so.
    """
    terms = tuple(int(t) for t in terms)
    if not terms:
        raise DomainError("need at least one term")
    client = client or OEISClient()
    bf = client.fetch(seq_id)
    values = bf.values()
    stripped = any(t < 0 for t in terms) and all(v >= 0 for v in values)
    cmp = tuple(abs(t) for t in terms) if stripped else terms

    best = None
    for off in offsets:
        k = 0
        while k < len(cmp) and off + k < len(values) and values[off + k] == cmp[k]:
            k += 1
        if best is None or k > best[1]:
            best = (off, k)
        if k == len(cmp):
            break
    off, k = best
    full = k == len(cmp)
    start = bf.entries[off][0] if off < len(bf.entries) else None
    return MatchReport(
        normalize_id(seq_id), terms, k, off, start,
        "match" if full else "mismatch", None if full else k, stripped, bf.source,
    )

"""OEIS b-file client with local cache, plus the sequence cross-checker.

b-files are plain text, one "index value" pair per line with '#' comment
lines; they are cached verbatim (one file per A-number, standard b-file
name) so runs are reproducible and tests stay offline.  Matching aligns our
terms (n = 1, 2, ...) with the reference at index n + shift for a small
shift window, because OEIS offsets differ by a position or two from the
n = 1 indexing used here (many entries lead with a 0th term).

Lucas sequences take rational values; the cited OEIS entries carry the
integer sequence a0 * L_n (a0 the numerator of a), which is the rational
coordinate of u^n cleared of its denominator, so that is what the matcher
compares for ``which="lucas"``.
"""

from __future__ import annotations

import os
import re
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .errors import BFileParseError, CacheMissError, NetworkError
from .quadfield import SquarefreeD
from .sequences import SeqContext, slice_terms

DEFAULT_CACHE_DIR = ".oeis-cache"
CACHE_DIR_ENV_VAR = "QUADFIB_CACHE_DIR"
MIN_TERMS_FOR_MATCH = 8
_A_NUMBER_RE = re.compile(r"\AA\d{6}\Z")
_REQUEST_TIMEOUT = 10.0
_REQUEST_SPACING = 1.0  # seconds between live requests
_last_request_time = 0.0

# The d -> A-number citations attached to the reference tables.
CITED_SEQUENCES: dict[int, dict[str, str]] = {
    2: {"fib": "A000129", "lucas": "A001333"},
    3: {"fib": "A001353", "lucas": "A001075"},
    5: {"fib": "A000045", "lucas": "A000032"},
    6: {"fib": "A004189", "lucas": "A001079"},
    7: {"fib": "A077412", "lucas": "A001081"},
    10: {"fib": "A005668", "lucas": "A005667"},
    11: {"fib": "A075843", "lucas": "A001085"},
    13: {"fib": "A006190", "lucas": "A006497"},
    37: {"fib": "A041061"},
    42: {"fib": "A097309"},
}


@dataclass(frozen=True)
class OeisRef:
    """A parsed b-file: consecutive terms starting at `offset`."""

    a_number: str
    terms: tuple[int, ...]
    offset: int

    def term_at(self, index: int) -> int | None:
        pos = index - self.offset
        if 0 <= pos < len(self.terms):
            return self.terms[pos]
        return None


@dataclass(frozen=True)
class MatchReport:
    """Outcome of aligning one of our sequences against an OEIS reference."""

    d: SquarefreeD
    which: str
    a_number: str
    shift: int
    matched_terms: int
    verdict: str  # "match" | "mismatch" | "insufficient_data"


def check_a_number(a_number: str) -> str:
    if not _A_NUMBER_RE.match(a_number):
        raise ValueError(f"malformed A-number {a_number!r} (expected A followed by 6 digits)")
    return a_number


def b_file_name(a_number: str) -> str:
    return f"b{a_number[1:]}.txt"


def parse_b_file(text: str, a_number: str) -> OeisRef:
    """Parse the "index value" line format; '#' comments and blanks ignored."""
    check_a_number(a_number)
    indices: list[int] = []
    terms: list[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(
                f"{a_number} line {line_number}: expected 'index value', got {raw!r}"
            )
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise BFileParseError(
                f"{a_number} line {line_number}: non-integer field in {raw!r}"
            ) from exc
        if indices and index != indices[-1] + 1:
            raise BFileParseError(
                f"{a_number} line {line_number}: index {index} is not consecutive"
            )
        indices.append(index)
        terms.append(value)
    if not terms:
        raise BFileParseError(f"{a_number}: b-file contains no terms")
    return OeisRef(a_number, tuple(terms), indices[0])


def resolve_cache_dir(cache_dir: str | os.PathLike | None = None) -> Path:
    """Flag value wins over the environment variable, which wins over the default."""
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_DIR_ENV_VAR)
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE_DIR)


def _download(url: str, timeout: float) -> bytes:
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read()


def oeis_fetch(
    a_number: str,
    cache_dir: str | os.PathLike | None = None,
    offline: bool = False,
) -> OeisRef:
    """Return the parsed b-file, from cache when present.

    Offline mode never touches the network and raises CacheMissError when the
    file is absent.  Live fetches are rate limited to one per second, use a
    10-second timeout, retry once, and store the payload verbatim.
    """
    check_a_number(a_number)
    path = resolve_cache_dir(cache_dir) / b_file_name(a_number)
    if path.exists():
        return parse_b_file(path.read_text(), a_number)
    if offline:
        raise CacheMissError(f"offline and no cached b-file for {a_number} at {path}")

    global _last_request_time
    url = f"https://oeis.org/{a_number}/{b_file_name(a_number)}"
    payload: bytes | None = None
    last_error: Exception | None = None
    for _ in range(2):  # one retry
        wait = _REQUEST_SPACING - (time.monotonic() - _last_request_time)
        if wait > 0:
            time.sleep(wait)
        _last_request_time = time.monotonic()
        try:
            payload = _download(url, _REQUEST_TIMEOUT)
            break
        except (urllib.error.URLError, OSError) as exc:
            last_error = exc
    if payload is None:
        raise NetworkError(f"could not download {url}: {last_error}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload)
    return parse_b_file(payload.decode(), a_number)


def _our_integer_terms(ctx: SeqContext, which: str, count: int) -> list[int]:
    terms = slice_terms(ctx, 1, count)
    if which == "fib":
        return [t.fib for t in terms]
    a0 = abs(ctx.a.numerator)
    values = []
    for t in terms:
        scaled = a0 * t.lucas
        assert scaled.denominator == 1
        values.append(int(scaled))
    return values


def oeis_match(
    ctx: SeqContext, which: str, ref: OeisRef, max_shift: int = 2
) -> MatchReport:
    """Align our terms with the reference and report the best run.

    For each shift s in [-max_shift, max_shift], our n-th term is compared
    with the reference at index n + s; the run counts consecutive agreements
    from the first n >= 1 the reference covers.  Verdict is "match" when the
    best run reaches 8 agreed terms.
    """
    if which not in ("fib", "lucas"):
        raise ValueError(f"which must be 'fib' or 'lucas', got {which!r}")
    if len(ref.terms) < MIN_TERMS_FOR_MATCH:
        return MatchReport(ctx.d, which, ref.a_number, 0, 0, "insufficient_data")
    top_index = ref.offset + len(ref.terms) - 1
    count = min(top_index + max_shift, 400)
    ours = _our_integer_terms(ctx, which, max(count, 1))
    best_run, best_shift = -1, 0
    for shift in range(-max_shift, max_shift + 1):
        n = max(1, ref.offset - shift)
        run = 0
        while n <= len(ours):
            expected = ref.term_at(n + shift)
            if expected is None or expected != ours[n - 1]:
                break
            run += 1
            n += 1
        if run > best_run:
            best_run, best_shift = run, shift
    verdict = "match" if best_run >= MIN_TERMS_FOR_MATCH else "mismatch"
    return MatchReport(ctx.d, which, ref.a_number, best_shift, best_run, verdict)

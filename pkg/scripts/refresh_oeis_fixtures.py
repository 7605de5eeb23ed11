#!/usr/bin/env python3
"""Maintain the vendored OEIS b-file fixtures under tests/fixtures/oeis/.

Default mode downloads fresh b-files from oeis.org (network required) and
truncates them to a manageable length.  ``--synthesize`` regenerates the
fixtures offline from the library's own exact sequences: the cited entries
are precisely the integerized sequences F_n (resp. a0*L_n) extended to
n = 0, so the synthesized files agree with the live ones on every line they
cover.  A041061 indexes from F_1 (continued-fraction denominators for d=37
start at 1, not 0); all other entries lead with the n = 0 term.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from quadfib.oeis import CITED_SEQUENCES, b_file_name, oeis_fetch, parse_b_file
from quadfib.sequences import context, slice_terms

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "oeis"
TERMS = 40
STARTS_AT_ONE = {"A041061"}


def integer_terms(d: int, which: str, start: int, stop: int) -> list[int]:
    ctx = context(d)
    terms = slice_terms(ctx, start, stop)
    if which == "fib":
        return [t.fib for t in terms]
    a0 = abs(ctx.a.numerator)
    return [int(a0 * t.lucas) for t in terms]


def synthesize() -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for d, cited in sorted(CITED_SEQUENCES.items()):
        for which, a_number in sorted(cited.items()):
            start = 1 if a_number in STARTS_AT_ONE else 0
            values = integer_terms(d, which, start, start + TERMS)
            lines = [f"# {b_file_name(a_number)}: vendored fixture in OEIS b-file format"]
            lines += [f"{i} {v}" for i, v in enumerate(values)]
            path = FIXTURE_DIR / b_file_name(a_number)
            path.write_text("\n".join(lines) + "\n")
            print(f"wrote {path} ({len(values)} terms)")


def refresh() -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for d, cited in sorted(CITED_SEQUENCES.items()):
        for which, a_number in sorted(cited.items()):
            ref = oeis_fetch(a_number, cache_dir=FIXTURE_DIR, offline=False)
            path = FIXTURE_DIR / b_file_name(a_number)
            kept = "\n".join(
                f"{ref.offset + i} {v}" for i, v in enumerate(ref.terms[: TERMS + 1])
            )
            path.write_text(kept + "\n")
            parse_b_file(path.read_text(), a_number)  # sanity
            print(f"refreshed {path} (d={d}, {which})")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--synthesize",
        action="store_true",
        help="regenerate fixtures offline from the library instead of oeis.org",
    )
    args = parser.parse_args()
    if args.synthesize:
        synthesize()
    else:
        refresh()
    return 0


if __name__ == "__main__":
    sys.exit(main())

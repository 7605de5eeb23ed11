from __future__ import annotations

from pathlib import Path

import pytest

from quadfib.quadfield import validate_d
from quadfib.sequences import SeqContext, context

FIXTURE_DIR = Path(__file__).parent / "fixtures" / "oeis"


def squarefree_range(lo: int, hi: int) -> list[int]:
    out = []
    for n in range(lo, hi + 1):
        try:
            validate_d(n)
        except ValueError:
            continue
        out.append(n)
    return out


@pytest.fixture(scope="session")
def ctx():
    """Memoized fundamental-unit contexts, shared across the whole run."""
    cache: dict[int, SeqContext] = {}

    def get(d: int) -> SeqContext:
        if d not in cache:
            cache[d] = context(d)
        return cache[d]

    return get


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR

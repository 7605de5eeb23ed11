#!/usr/bin/env python3
"""Print the reference tables: fundamental unit, norm and leading terms.

For each small squarefree d this recomputes the fundamental unit from its
continued fraction and the first Fibonacci/Lucas terms from the recurrence,
which is exactly the data the acceptance suite pins.
"""

from __future__ import annotations

from quadfib.oeis import CITED_SEQUENCES
from quadfib.sequences import context, lucas, slice_terms
from quadfib.serialize import frac_to_str

MAIN_FIELDS = (2, 3, 5, 6, 7, 10, 11, 13)
LARGE_FIELDS = (37, 38, 39, 41, 42)


def main() -> None:
    print(f"{'d':>3} {'unit':>14} {'norm':>5}  first terms")
    print("-" * 78)
    for d in MAIN_FIELDS:
        c = context(d)
        fibs = " ".join(str(t.fib) for t in slice_terms(c, 1, 6))
        lucs = " ".join(frac_to_str(lucas(c, n)) for n in range(1, 7))
        cited = CITED_SEQUENCES.get(d, {})
        print(f"{d:>3} {str(c.unit.element):>14} {c.delta:>5}  F: {fibs}")
        print(f"{'':>24}  L: {lucs}")
        if cited:
            print(f"{'':>24}  OEIS: {cited.get('fib', '-')} / {cited.get('lucas', '-')}")
    print("-" * 78)
    for d in LARGE_FIELDS:
        c = context(d)
        fibs = " ".join(str(t.fib) for t in slice_terms(c, 1, 6))
        cited = CITED_SEQUENCES.get(d, {}).get("fib", "-")
        print(f"{d:>3} {str(c.unit.element):>14} {c.delta:>5}  F: {fibs}  [{cited}]")


if __name__ == "__main__":
    main()

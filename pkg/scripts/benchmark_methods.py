#!/usr/bin/env python3
"""Cross-algorithm benchmark for large-index term computation.

Times the three generation routes on single large indices:

  recurrence  O(n) big-integer steps
  unit-power  O(log n) element squarings (numbers of comparable size)
  binomial    O(n) summands with power tables (kept to smaller n)

Run: python scripts/benchmark_methods.py [d]
"""

from __future__ import annotations

import sys
import time

from quadfib.sequences import context, fib, fib_binet, fib_binomial

BINOMIAL_CUTOFF = 4_000


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    sys.set_int_max_str_digits(10**6)  # reporting digit counts of huge terms
    d = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    ctx = context(d)
    print(f"d = {d}, unit = {ctx.unit.element}, norm = {ctx.delta}")
    print(f"{'n':>8} {'recurrence':>12} {'unit-power':>12} {'binomial':>12} {'digits':>8}")
    for n in (100, 1_000, 4_000, 20_000, 100_000):
        value = fib_binet(ctx, n)
        assert fib(ctx, n) == value
        t_rec = best_of(3, fib, ctx, n)
        t_pow = best_of(3, fib_binet, ctx, n)
        if n <= BINOMIAL_CUTOFF:
            assert fib_binomial(ctx, n) == value
            t_bin = f"{best_of(3, fib_binomial, ctx, n) * 1000:10.2f}ms"
        else:
            t_bin = f"{'skipped':>12}"
        print(
            f"{n:>8} {t_rec * 1000:10.2f}ms {t_pow * 1000:10.2f}ms "
            f"{t_bin} {len(str(value)):>8}"
        )


if __name__ == "__main__":
    main()

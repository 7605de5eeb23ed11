"""Fibonacci and Lucas sequences attached to a real quadratic field.

Writing the chosen unit as u = a + b*sqrt(d) and its powers as
u**n = a_n + b_n*sqrt(d), the sequences are F_n = b_n / b (always an
integer) and L_n = a_n / a (a rational).  Both satisfy the same
second-order recurrence

    t_{n+2} = -delta * t_n + 2a * t_{n+1},        delta = norm(u) = +-1,

started from F_1 = 1, F_2 = 2a and L_1 = 1, L_2 = 2a - delta/a, and both
extend to every integer index through the reflection laws
F_{-n} = -delta**n * F_n, F_0 = 0, L_{-n} = delta**n * L_n, L_0 = 1/a.

Three independent generation routes are provided: the recurrence
(:func:`fib`/:func:`lucas`), exact unit powers (:func:`fib_binet`/
:func:`lucas_binet`) and the closed binomial sums (:func:`fib_binomial`/
:func:`lucas_binomial`); they agree exactly and cross-check one another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    InvalidRangeError,
    NonPositiveIndexError,
    NotPositiveError,
    ZeroIrrationalPartError,
    ZeroTraceError,
)
from .quadfield import QuadElement, Rational, SquarefreeD, as_field, validate_d
from .unitfinder import Unit, fundamental_unit, unit_from_power


def _delta_pow(delta: int, n: int) -> int:
    """delta**n for delta = +-1 and any integer n."""
    return delta if n & 1 else 1


@dataclass(frozen=True)
class SeqContext:
    """A field d plus a chosen unit: everything sequence generation needs.

    ``two_a`` and ``two_b`` are the integers 2a and 2b (integrality of the
    unit makes them integers even when a, b are half-integers), and
    ``delta`` is the unit's norm a^2 - b^2*d = +-1.
    """

    d: SquarefreeD
    unit: Unit
    delta: int
    two_a: int
    two_b: int

    @property
    def a(self) -> Rational:
        return Fraction(self.two_a, 2)

    @property
    def b(self) -> Rational:
        return Fraction(self.two_b, 2)


def context_for_unit(unit: Unit) -> SeqContext:
    """Build a sequence context over an explicit unit."""
    el = unit.element
    if el.y == 0:
        raise ZeroIrrationalPartError(
            "the unit +-1 has no sqrt(d)-coordinate and cannot seed a sequence"
        )
    if el.x == 0:
        # impossible for integral units of norm +-1 with d >= 2, but the
        # Lucas normalization divides by a, so guard it explicitly
        raise ZeroTraceError("unit has zero rational coordinate")
    two_a = 2 * el.x
    two_b = 2 * el.y
    assert two_a.denominator == 1 and two_b.denominator == 1
    return SeqContext(
        d=el.d,
        unit=unit,
        delta=unit.delta,
        two_a=int(two_a),
        two_b=int(two_b),
    )


def context(d: int | SquarefreeD) -> SeqContext:
    """The context over the fundamental unit of Q(sqrt(d))."""
    return context_for_unit(fundamental_unit(as_field(d)))


def context_with_unit(d: int | SquarefreeD, sign: int, exponent: int) -> SeqContext:
    """The context over the unit sign * eps**exponent."""
    return context_for_unit(unit_from_power(as_field(d), sign, exponent))


@dataclass(frozen=True)
class SeqTerm:
    """One index with its exact Fibonacci and Lucas values."""

    n: int
    fib: int
    lucas: Rational

    def __post_init__(self) -> None:
        # integrality of F_n is a theorem; a failure here is a program bug
        assert isinstance(self.fib, int)
        object.__setattr__(self, "lucas", Fraction(self.lucas))


def fib(ctx: SeqContext, n: int) -> int:
    """Exact F_n for any integer n."""
    if n == 0:
        return 0
    if n < 0:
        return -_delta_pow(ctx.delta, -n) * fib(ctx, -n)
    if n == 1:
        return 1
    prev, cur = 1, ctx.two_a
    for _ in range(n - 2):
        prev, cur = cur, -ctx.delta * prev + ctx.two_a * cur
    return cur


def lucas(ctx: SeqContext, n: int) -> Rational:
    """Exact L_n for any integer n."""
    if n == 0:
        return Fraction(2, ctx.two_a)
    if n < 0:
        return _delta_pow(ctx.delta, -n) * lucas(ctx, -n)
    if n == 1:
        return Fraction(1)
    prev, cur = Fraction(1), Fraction(ctx.two_a * ctx.two_a - 2 * ctx.delta, ctx.two_a)
    for _ in range(n - 2):
        prev, cur = cur, -ctx.delta * prev + ctx.two_a * cur
    return cur


def fib_binet(ctx: SeqContext, n: int) -> int:
    """F_n as b_n / b from the exact n-th power of the unit."""
    power = ctx.unit.element**n
    value = power.y / ctx.b
    assert value.denominator == 1
    return int(value)


def lucas_binet(ctx: SeqContext, n: int) -> Rational:
    """L_n as a_n / a from the exact n-th power of the unit."""
    power = ctx.unit.element**n
    return power.x / ctx.a


def fib_binomial(ctx: SeqContext, n: int) -> int:
    """F_n from the closed even/odd binomial sums (defined for n >= 1).

    With A = 2a and B = 2b the half-integer coordinates clear out:
    every term a^i * b^j with i + j = n - 1 becomes A^i * B^j / 2^(n-1),
    so the sum is evaluated in integers and divided once at the end.
    """
    if n < 1:
        raise NonPositiveIndexError(f"binomial sums need n >= 1, got {n}")
    big_a, big_b, d = ctx.two_a, ctx.two_b, ctx.d.d
    apow, bpow = _power_tables(big_a, big_b, n)
    if n % 2 == 0:
        s = sum(
            comb(n, 2 * t + 1)
            * apow[2 * t + 1]
            * bpow[n - 2 * t - 2]
            * d ** ((n - 2) // 2 - t)
            for t in range((n - 2) // 2 + 1)
        )
    else:
        s = sum(
            comb(n, 2 * t) * apow[2 * t] * bpow[n - 2 * t - 1] * d ** ((n - 1) // 2 - t)
            for t in range((n - 1) // 2 + 1)
        )
    value, rem = divmod(s, 1 << (n - 1))
    assert rem == 0
    return value


def lucas_binomial(ctx: SeqContext, n: int) -> Rational:
    """L_n from the closed even/odd binomial sums (defined for n >= 1).

    The even case carries a single a^(2t-1) factor with t = 0, i.e. one
    division by a; scaling the whole sum by a keeps the arithmetic integral.
    """
    if n < 1:
        raise NonPositiveIndexError(f"binomial sums need n >= 1, got {n}")
    big_a, big_b, d = ctx.two_a, ctx.two_b, ctx.d.d
    apow, bpow = _power_tables(big_a, big_b, n)
    if n % 2 == 0:
        s = sum(
            comb(n, 2 * t) * apow[2 * t] * bpow[n - 2 * t] * d ** (n // 2 - t)
            for t in range(n // 2 + 1)
        )
        return Fraction(s, big_a << (n - 1))
    s = sum(
        comb(n, 2 * t + 1) * apow[2 * t] * bpow[n - 2 * t - 1] * d ** ((n - 1) // 2 - t)
        for t in range((n - 1) // 2 + 1)
    )
    return Fraction(s, 1 << (n - 1))


def _power_tables(big_a: int, big_b: int, n: int) -> tuple[list[int], list[int]]:
    apow = [1] * (n + 1)
    bpow = [1] * (n + 1)
    for i in range(1, n + 1):
        apow[i] = apow[i - 1] * big_a
        bpow[i] = bpow[i - 1] * big_b
    return apow, bpow


def slice_terms(ctx: SeqContext, start: int, stop: int) -> list[SeqTerm]:
    """Consecutive SeqTerms for n = start..stop, one recurrence pass each way."""
    if start > stop:
        raise InvalidRangeError(f"empty index range {start}..{stop}")
    two_a, delta = ctx.two_a, ctx.delta
    values: dict[int, tuple[int, Rational]] = {
        0: (0, Fraction(2, two_a)),
        1: (1, Fraction(1)),
    }
    f_prev, f_cur = 0, 1
    l_prev, l_cur = values[0][1], values[1][1]
    for n in range(2, stop + 1):
        f_prev, f_cur = f_cur, -delta * f_prev + two_a * f_cur
        l_prev, l_cur = l_cur, -delta * l_prev + two_a * l_cur
        values[n] = (f_cur, l_cur)
    f_next, f_cur = 1, 0
    l_next, l_cur = values[1][1], values[0][1]
    for n in range(-1, start - 1, -1):
        f_next, f_cur = f_cur, delta * (two_a * f_cur - f_next)
        l_next, l_cur = l_cur, delta * (two_a * l_cur - l_next)
        values[n] = (f_cur, l_cur)
    return [SeqTerm(n, *values[n]) for n in range(start, stop + 1)]


@dataclass(frozen=True)
class KFibMapping:
    """The unique field in which the k-Fibonacci sequence lives.

    k^2 + 4 factors as r^2 * d with d squarefree, and (k + r*sqrt(d))/2 is
    then an integral unit of norm -1 whose Fibonacci sequence satisfies
    F_{n+2} = k*F_{n+1} + F_n.
    """

    k: int
    d: SquarefreeD
    r: int
    unit: Unit

    def context(self) -> SeqContext:
        return context_for_unit(self.unit)


def kfib_map(k: int) -> KFibMapping:
    """Map k >= 1 to its field: the unique (d, r) with k^2 + 4 = r^2 * d."""
    if k < 1:
        raise NotPositiveError(f"k must be a positive integer, got {k}")
    m = k * k + 4
    square_free, r = _split_square(m)
    fd = validate_d(square_free)
    unit = Unit(QuadElement(fd, Fraction(k, 2), Fraction(r, 2)), -1)
    return KFibMapping(k=k, d=fd, r=r, unit=unit)


def _split_square(m: int) -> tuple[int, int]:
    """m = square_free * r**2 with square_free squarefree."""
    square_free, r = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            r *= p ** (e // 2)
            if e % 2:
                square_free *= p
        p += 1 if p == 2 else 2
    square_free *= m
    return square_free, r


def as_k_fibonacci(ctx: SeqContext) -> int | None:
    """The k with F_{n+2} = k*F_{n+1} + F_n, when the context has one.

    That happens exactly when delta = -1 (and 2a >= 1); k is then 2a.
    """
    if ctx.delta == -1 and ctx.two_a >= 1:
        return ctx.two_a
    return None

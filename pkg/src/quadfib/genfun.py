"""Closed-form generating functions, golden-ratio check, convergence probes.

The ordinary series sum_{n>=1} F_n x^(n-1) and sum_{n>=1} L_n x^(n-1) have
radius of convergence 1/u (u the context unit, u > 1 for fundamental
contexts) and closed forms

    f(x) = 1 / (delta*x^2 - 2a*x + 1),
    g(x) = (a - delta*x) / (a * (delta*x^2 - 2a*x + 1)) = ((a - delta*x)/a) f(x).

The alternating variants sum_n delta^n F_{n+1} x^n and delta^n L_{n+1} x^n
converge for |x| < min(|u|, |conj(u)|) with closed forms

    f1(x) = delta / (x^2 - 2a*x + delta),
    g1(x) = delta*(a - x) / (a * (x^2 - 2a*x + delta)) = ((a - x)/a) f1(x).

Series evaluation is exact rational arithmetic throughout; only the radius
guard is numeric (50-digit fixed point with a 1e-10 safety margin, since the
radius itself is irrational).  Truncated sums are exact partial sums, so the
closed-vs-truncated comparison is an exact rational difference checked
against a decimal bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPositiveError, OutsideRadiusError, PoleError
from .quadfield import QuadElement, Rational
from .sequences import SeqContext, lucas, slice_terms

_GUARD_DIGITS = 50
_MARGIN_EXP = 10  # reject |x| within 1e-10 of the radius


@dataclass(frozen=True)
class FixedPointDecimal:
    """value = scaled_value / 10**digits, held exactly as integers.

    Construction always floors the represented real, so the stored value is
    within one unit in the last place below the true one; comparisons that
    should tolerate that error use :meth:`approx_eq`, which allows
    10**(-digits+2).
    """

    scaled_value: int
    digits: int

    def as_fraction(self) -> Rational:
        return Fraction(self.scaled_value, 10**self.digits)

    def approx_eq(self, other: FixedPointDecimal) -> bool:
        digits = min(self.digits, other.digits)
        tol = Fraction(1, 10 ** (digits - 2))
        return abs(self.as_fraction() - other.as_fraction()) <= tol

    def __str__(self) -> str:
        sign = "-" if self.scaled_value < 0 else ""
        mag = abs(self.scaled_value)
        whole, frac = divmod(mag, 10**self.digits)
        return f"{sign}{whole}.{frac:0{self.digits}d}"


def _check_digits(digits: int) -> None:
    if not 1 <= digits <= 10_000:
        raise ValueError(f"digits must lie in [1, 10000], got {digits}")


def approx_sqrt(n: int, digits: int) -> FixedPointDecimal:
    """floor(sqrt(n) * 10**digits) / 10**digits, via integer square root.

    Accepts any n >= 0 (perfect squares included) so the primitive itself
    can be tested.
    """
    _check_digits(digits)
    if n < 0:
        raise ValueError("cannot take a real square root of a negative number")
    return FixedPointDecimal(math.isqrt(n * 10 ** (2 * digits)), digits)


def approx_unit(ctx: SeqContext, digits: int) -> FixedPointDecimal:
    """floor(u * 10**digits) / 10**digits for the context unit u."""
    _check_digits(digits)
    return FixedPointDecimal(math.floor(ctx.unit.element * 10**digits), digits)


def _require_inside_radius(ctx: SeqContext, x: Rational) -> None:
    """Reject |x| >= (1 - 1e-10) / max(|u|, 1/|u|), decided at 50 digits.

    |u * conj(u)| = 1, so max(|u|, 1/|u|) is 1/min(|u|, |conj(u)|): the same
    guard serves both series families, and it also covers contexts over
    units with |u| < 1.
    """
    x = Fraction(x)
    if x == 0:
        return
    scale = 10**_GUARD_DIGITS
    u_scaled = math.floor(abs(ctx.unit.element) * scale)
    p, q = abs(x.numerator), x.denominator
    if u_scaled >= scale:  # |u| >= 1: radius is 1/|u|
        inside = p * (u_scaled + 1) < q * (scale - 10 ** (_GUARD_DIGITS - _MARGIN_EXP))
    else:  # |u| < 1: radius is |u|
        m = 10**_MARGIN_EXP
        inside = p * scale * m < q * u_scaled * (m - 1)
    if not inside:
        raise OutsideRadiusError(f"|{x}| is not safely inside the radius of convergence")


def _fib_denominator(ctx: SeqContext, x: Rational) -> Rational:
    den = ctx.delta * x * x - 2 * ctx.a * x + 1
    if den == 0:
        # unreachable for rational x (the roots are irrational); kept as a guard
        raise PoleError(f"generating-function denominator vanishes at x = {x}")
    return den


def gf_fib_closed(ctx: SeqContext, x: Rational) -> Rational:
    """Closed form of sum_{n>=1} F_n x^(n-1), for |x| inside the radius."""
    x = Fraction(x)
    _require_inside_radius(ctx, x)
    return 1 / _fib_denominator(ctx, x)


def gf_lucas_closed(ctx: SeqContext, x: Rational) -> Rational:
    """Closed form of sum_{n>=1} L_n x^(n-1), for |x| inside the radius."""
    x = Fraction(x)
    _require_inside_radius(ctx, x)
    return (ctx.a - ctx.delta * x) / (ctx.a * _fib_denominator(ctx, x))


def gf_alt_closed(ctx: SeqContext, x: Rational) -> tuple[Rational, Rational]:
    """Closed forms (f1(x), g1(x)) of the alternating series."""
    x = Fraction(x)
    _require_inside_radius(ctx, x)
    den = x * x - 2 * ctx.a * x + ctx.delta
    if den == 0:
        raise PoleError(f"generating-function denominator vanishes at x = {x}")
    f1 = ctx.delta / den
    g1 = (ctx.a - x) / ctx.a * f1
    return f1, g1


@dataclass(frozen=True)
class GFQuery:
    """A series evaluation request; the radius guard runs at construction."""

    ctx: SeqContext
    x: Rational
    truncation: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        if self.truncation < 1:
            raise NotPositiveError(f"truncation must be >= 1, got {self.truncation}")
        _require_inside_radius(self.ctx, self.x)


_SERIES = ("fib", "lucas", "alt_fib", "alt_lucas")


def gf_truncated(query: GFQuery, which: str) -> Rational:
    """The exact partial sum with `truncation` terms of the chosen series."""
    if which not in _SERIES:
        raise ValueError(f"which must be one of {_SERIES}, got {which!r}")
    n_terms = query.truncation
    terms = slice_terms(query.ctx, 1, n_terms)
    x = query.x
    delta = query.ctx.delta
    total = Fraction(0)
    xpow = Fraction(1)
    sign = 1
    for term in terms:
        if which == "fib":
            total += term.fib * xpow
        elif which == "lucas":
            total += term.lucas * xpow
        elif which == "alt_fib":
            total += sign * term.fib * xpow
        else:
            total += sign * term.lucas * xpow
        xpow *= x
        sign *= delta
    return total


def ratio_error(
    ctx: SeqContext, n: int, digits: int, which: str = "fib"
) -> FixedPointDecimal:
    """|t_{n+1}/t_n - u| floored at `digits` decimals, t the F or L sequence.

    The difference is an exact element of Q(sqrt(d)), so the decimal window
    is the only approximation.
    """
    _check_digits(digits)
    if n < 1:
        raise NotPositiveError(f"ratio error needs n >= 1, got {n}")
    if which not in ("fib", "lucas"):
        raise ValueError(f"which must be 'fib' or 'lucas', got {which!r}")
    pair = slice_terms(ctx, n, n + 1)
    if which == "fib":
        ratio = Fraction(pair[1].fib, pair[0].fib)
    else:
        ratio = pair[1].lucas / pair[0].lucas
    u = ctx.unit.element
    diff = QuadElement(u.d, ratio - u.x, -u.y)
    return FixedPointDecimal(math.floor(abs(diff) * 10**digits), digits)


def characteristic_check(ctx: SeqContext) -> bool:
    """Exactly test u^2 - 2a*u + delta = 0: the unit is the field's golden ratio."""
    u = ctx.unit.element
    return u * u - 2 * ctx.a * u + ctx.delta == 0

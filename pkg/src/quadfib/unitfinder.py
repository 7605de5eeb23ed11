"""Fundamental units of real quadratic fields via periodic continued fractions.

The expansion seed is w = sqrt(d), or w = (1+sqrt(d))/2 when d = 1 (mod 4)
so that half-integer units are reachable.  The classical PQa iteration runs
on exact integer state (P + sqrt(D))/Q; for both seeds the first complete
quotient is reduced, so the expansion is purely periodic from index 1 and
the period is detected by the first recurrence of that state.  If the
convergent just before the period end is p/q, then p - q*conj(w) is the
smallest unit > 1 of the ring of integers, with norm (-1)^period.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ResourceLimitError, ZeroExponentError
from .quadfield import QuadElement, SquarefreeD, as_field

DEFAULT_PERIOD_CAP = 10**6


class CFSeed(enum.Enum):
    """Which quadratic irrational is expanded."""

    SQRT_D = "sqrt_d"
    HALF_ONE_PLUS_SQRT_D = "half_one_plus_sqrt_d"


@dataclass(frozen=True)
class CFExpansion:
    """One full period of a continued fraction [a0; a1, ..., al, a1, ...]."""

    d: SquarefreeD
    seed: CFSeed
    initial_quotient: int
    periodic_quotients: tuple[int, ...]
    period_length: int

    def quotients(self) -> Iterator[int]:
        """The infinite partial-quotient stream a0, a1, a2, ..."""
        yield self.initial_quotient
        yield from itertools.cycle(self.periodic_quotients)

    def convergents(self, count: int) -> list[tuple[int, int]]:
        """The first `count` convergents (p_k, q_k), k = 0, 1, ..."""
        out: list[tuple[int, int]] = []
        p_prev, p = 0, 1
        q_prev, q = 1, 0
        for a in itertools.islice(self.quotients(), count):
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
            out.append((p, q))
        return out


@dataclass(frozen=True)
class Unit:
    """An integral element of norm +-1, together with that norm."""

    element: QuadElement
    delta: int

    def __post_init__(self) -> None:
        assert self.delta in (-1, 1)
        assert self.element.is_integral()
        assert self.element.norm() == self.delta

    def __str__(self) -> str:
        return str(self.element)


def _seed_state(fd: SquarefreeD, seed: CFSeed) -> tuple[int, int, int]:
    """Integer state (P, Q, D) with w = (P + sqrt(D))/Q and Q | D - P^2."""
    if seed is CFSeed.SQRT_D:
        return 0, 1, fd.d
    if fd.d % 4 == 1:
        return 1, 2, fd.d
    # (1 + sqrt(d))/2 = (2 + sqrt(4d))/4 keeps the divisibility invariant
    return 2, 4, 4 * fd.d


def continued_fraction(
    d: int | SquarefreeD,
    seed: CFSeed = CFSeed.SQRT_D,
    max_period: int = DEFAULT_PERIOD_CAP,
) -> CFExpansion:
    """Expand the seed irrational through exactly one full period."""
    fd = as_field(d)
    p, q, big_d = _seed_state(fd, seed)
    sqrt_big_d = math.isqrt(big_d)

    a0 = (p + sqrt_big_d) // q
    p = a0 * q - p
    q = (big_d - p * p) // q

    first_state = (p, q)
    quotients: list[int] = []
    while True:
        a = (p + sqrt_big_d) // q
        quotients.append(a)
        p = a * q - p
        new_q, rem = divmod(big_d - p * p, q)
        assert rem == 0, "PQa divisibility invariant broken"
        q = new_q
        if (p, q) == first_state:
            break
        if len(quotients) >= max_period:
            raise ResourceLimitError(
                f"continued-fraction period of d={fd.d} exceeds cap {max_period}"
            )
    return CFExpansion(fd, seed, a0, tuple(quotients), len(quotients))


def fundamental_unit(
    d: int | SquarefreeD, max_period: int = DEFAULT_PERIOD_CAP
) -> Unit:
    """The smallest unit > 1 of the ring of integers of Q(sqrt(d))."""
    fd = as_field(d)
    seed = CFSeed.HALF_ONE_PLUS_SQRT_D if fd.is_one_mod_four else CFSeed.SQRT_D
    cf = continued_fraction(fd, seed, max_period)
    p, q = cf.convergents(cf.period_length)[-1]
    if seed is CFSeed.SQRT_D:
        eps = QuadElement(fd, Fraction(p), Fraction(q))
    else:
        # p - q*(1 - sqrt(d))/2
        eps = QuadElement(fd, Fraction(2 * p - q, 2), Fraction(q, 2))
    delta = eps.norm()
    assert delta.denominator == 1 and abs(delta) == 1
    assert eps.x > 0 and eps.y > 0 and eps > 1
    return Unit(eps, int(delta))


def unit_from_power(
    d: int | SquarefreeD, sign: int, exponent: int, max_period: int = DEFAULT_PERIOD_CAP
) -> Unit:
    """The unit sign * eps**exponent, eps the fundamental unit.

    Every unit of the field has this shape; exponent 0 is rejected because
    +-1 has zero sqrt(d)-coordinate and cannot seed a sequence.
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if exponent == 0:
        raise ZeroExponentError("unit exponent must be nonzero")
    base = fundamental_unit(d, max_period)
    element = base.element**exponent
    if sign < 0:
        element = -element
    return Unit(element, int(element.norm()))

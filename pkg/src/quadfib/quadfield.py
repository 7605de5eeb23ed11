"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Elements x + y*sqrt(d) carry exact rational coordinates, so arithmetic,
comparisons, floors and powers are all exact.  The companion 2x2 matrix
representation [[x, y*d], [y, x]] multiplies like the elements do and has
determinant equal to the field norm x^2 - d*y^2; it doubles as an
independent route to element powers via the closed binomial sums in
:func:`power_coeffs_closed`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import comb

from .errors import (
    MixedFieldsError,
    NonPositiveIndexError,
    NotPositiveError,
    NotSquarefreeError,
    PerfectSquareError,
)

# Exact rational carrier used throughout the package: always in lowest terms
# with positive denominator, structural equality.
Rational = Fraction


@dataclass(frozen=True)
class SquarefreeD:
    """A validated squarefree integer d >= 2 with its field discriminant."""

    d: int
    discriminant: int

    @property
    def is_one_mod_four(self) -> bool:
        return self.d % 4 == 1

    def __str__(self) -> str:
        return str(self.d)


def validate_d(n: int) -> SquarefreeD:
    """Check that n defines a real quadratic field and attach its discriminant.

    The discriminant is d itself when d = 1 (mod 4) and 4d otherwise.
    """
    if n <= 1:
        raise NotPositiveError(f"d must be an integer >= 2, got {n}")
    root = math.isqrt(n)
    if root * root == n:
        raise PerfectSquareError(f"d must not be a perfect square, got {n} = {root}^2")
    p = 2
    while p * p <= n:  # trial division is instant at desk scale
        if n % (p * p) == 0:
            raise NotSquarefreeError(f"{n} is divisible by {p}^2")
        p += 1
    return SquarefreeD(n, n if n % 4 == 1 else 4 * n)


def as_field(d: int | SquarefreeD) -> SquarefreeD:
    """Coerce an int to a validated SquarefreeD; pass SquarefreeD through."""
    return d if isinstance(d, SquarefreeD) else validate_d(d)


def _root_str(y: Fraction, d: int) -> str:
    sign = "+" if y > 0 else "-"
    mag = abs(y)
    coeff = "" if mag == 1 else str(mag)
    return f"{sign}{coeff}√{d}"


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadElement:
    """An element x + y*sqrt(d) of Q(sqrt(d)) with exact rational x, y.

    Immutable; two elements are equal iff their coordinates agree, which is
    exact equality in the field since sqrt(d) is irrational.  Plain ints and
    Fractions compare and combine as rational elements of the same field.
    """

    d: SquarefreeD
    x: Rational
    y: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if isinstance(other, QuadElement):
            if self.d != other.d:
                # rational-valued elements coincide across fields
                return self.y == 0 and other.y == 0 and self.x == other.x
            return self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self) -> int:
        if self.y == 0:
            return hash(self.x)
        return hash((self.d, self.x, self.y))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def one(cls, d: SquarefreeD) -> QuadElement:
        return cls(d, Fraction(1), Fraction(0))

    @classmethod
    def zero(cls, d: SquarefreeD) -> QuadElement:
        return cls(d, Fraction(0), Fraction(0))

    def _coerce(self, other: object) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.d != self.d:
                raise MixedFieldsError(
                    f"cannot combine elements of Q(√{self.d.d}) and Q(√{other.d.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(self.d, Fraction(other), Fraction(0))
        return None

    # -- ring / field operations ----------------------------------------------

    def __add__(self, other: object) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.d, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.d, self.x - o.x, self.y - o.y)

    def __rsub__(self, other: object) -> QuadElement:
        return (-self) + other

    def __neg__(self) -> QuadElement:
        return QuadElement(self.d, -self.x, -self.y)

    def __mul__(self, other: object) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(
            self.d,
            self.x * o.x + self.y * o.y * self.d.d,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> QuadElement:
        """Exact n-th power by binary exponentiation; negative n via inverse."""
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = base.inverse()
            n = -n
        if n == 0:
            return QuadElement.one(self.d)
        result = base
        for i in reversed(range(n.bit_length() - 1)):
            result = result * result
            if (n >> i) & 1:
                result = result * base
        return result

    def conj(self) -> QuadElement:
        """The image under sqrt(d) -> -sqrt(d)."""
        return QuadElement(self.d, self.x, -self.y)

    def norm(self) -> Rational:
        """x^2 - d*y^2, the product of the element with its conjugate."""
        return self.x * self.x - self.d.d * self.y * self.y

    def inverse(self) -> QuadElement:
        """conj(e) / norm(e); raises ZeroDivisionError on zero."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(√%d)" % self.d.d)
        return QuadElement(self.d, self.x / n, -self.y / n)

    # -- predicates and exact order -------------------------------------------

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_integral(self) -> bool:
        """True iff the element lies in the ring of integers of Q(sqrt(d)).

        For d = 1 (mod 4) this means 2x and 2y are integers of equal parity;
        otherwise x and y must themselves be integers.
        """
        if self.d.is_one_mod_four:
            tx, ty = 2 * self.x, 2 * self.y
            if tx.denominator != 1 or ty.denominator != 1:
                return False
            return (tx.numerator - ty.numerator) % 2 == 0
        return self.x.denominator == 1 and self.y.denominator == 1

    def _sign(self) -> int:
        x, y, d = self.x, self.y, self.d.d
        if y == 0:
            return (x > 0) - (x < 0)
        if x == 0:
            return 1 if y > 0 else -1
        if x > 0 and y > 0:
            return 1
        if x < 0 and y < 0:
            return -1
        # mixed signs: the side with larger square wins; x^2 = d*y^2 is
        # impossible because sqrt(d) is irrational
        bigger_rational = x * x > d * y * y
        if x > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __abs__(self) -> QuadElement:
        return -self if self._sign() < 0 else self

    def __floor__(self) -> int:
        """Exact floor via the integer square root of the scaled radicand."""
        c = self.x.denominator * self.y.denominator // math.gcd(
            self.x.denominator, self.y.denominator
        )
        a = int(self.x * c)
        b = int(self.y * c)
        if b >= 0:
            s = math.isqrt(b * b * self.d.d)
        else:
            # b*b*d is never a perfect square for b != 0, so ceil = isqrt + 1
            s = -math.isqrt(b * b * self.d.d) - 1
        return (a + s) // c

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(self.d.d)

    def __str__(self) -> str:
        d = self.d.d
        if self.y == 0:
            return str(self.x)
        if self.x.denominator in (1, 2) and self.y.denominator in (1, 2):
            if self.x.denominator == 2 or self.y.denominator == 2:
                p, q = 2 * self.x, 2 * self.y
                return f"({p}{_root_str(q, d)})/2"
            if self.x == 0:
                return _root_str(self.y, d).lstrip("+")
            return f"{self.x}{_root_str(self.y, d)}"
        return f"{self.x}{_root_str(self.y, d)}"


@dataclass(frozen=True)
class MatrixRep:
    """The 2x2 matrix [[x, y*d], [y, x]] attached to x + y*sqrt(d).

    Multiplication of representations mirrors element multiplication, and
    the determinant equals the element's norm (so units map to matrices of
    determinant +-1).
    """

    d: SquarefreeD
    entries: tuple[tuple[Rational, Rational], tuple[Rational, Rational]]

    @classmethod
    def from_element(cls, e: QuadElement) -> MatrixRep:
        return cls(e.d, ((e.x, e.y * e.d.d), (e.y, e.x)))

    def to_element(self) -> QuadElement:
        return QuadElement(self.d, self.entries[0][0], self.entries[1][0])

    def __mul__(self, other: MatrixRep) -> MatrixRep:
        if other.d != self.d:
            raise MixedFieldsError("matrix representations over different fields")
        (a, b), (c, e) = self.entries
        (f, g), (h, i) = other.entries
        return MatrixRep(
            self.d,
            ((a * f + b * h, a * g + b * i), (c * f + e * h, c * g + e * i)),
        )

    def det(self) -> Rational:
        (a, b), (c, e) = self.entries
        return a * e - b * c


def matrix_rep(e: QuadElement) -> MatrixRep:
    """The matrix representation of an element."""
    return MatrixRep.from_element(e)


def power_coeffs_closed(e: QuadElement, n: int) -> tuple[Rational, Rational]:
    """Coordinates (a_n, b_n) of e**n from the even/odd binomial sums.

    This never multiplies elements, so it is an independent oracle for the
    binary-exponentiation path of ``QuadElement.__pow__``.
    """
    if n < 1:
        raise NonPositiveIndexError(f"closed power sums need n >= 1, got {n}")
    a, b, d = e.x, e.y, e.d.d
    apow = [Fraction(1)]
    bpow = [Fraction(1)]
    for _ in range(n):
        apow.append(apow[-1] * a)
        bpow.append(bpow[-1] * b)
    if n % 2 == 0:
        an = sum(
            comb(n, 2 * t) * apow[2 * t] * bpow[n - 2 * t] * d ** (n // 2 - t)
            for t in range(n // 2 + 1)
        )
        bn = sum(
            comb(n, 2 * t + 1)
            * apow[2 * t + 1]
            * bpow[n - 2 * t - 1]
            * d ** ((n - 2) // 2 - t)
            for t in range((n - 2) // 2 + 1)
        )
    else:
        an = sum(
            comb(n, 2 * t + 1)
            * apow[2 * t + 1]
            * bpow[n - 2 * t - 1]
            * d ** ((n - 1) // 2 - t)
            for t in range((n - 1) // 2 + 1)
        )
        bn = sum(
            comb(n, 2 * t) * apow[2 * t] * bpow[n - 2 * t] * d ** ((n - 1) // 2 - t)
            for t in range((n - 1) // 2 + 1)
        )
    return Fraction(an), Fraction(bn)

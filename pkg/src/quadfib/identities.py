"""A data-driven catalog of exact sequence identities with a range verifier.

Every entry evaluates both sides of a closed-form relation between F and L
terms (or unit powers) with exact rational arithmetic over a scanned index
range, so a verification either passes with zero counterexamples or reports
every violating index pair with both sides.  Identities are data, not
hand-written test cases: the CLI can run any entry over any field and range.

Tags are opaque catalog keys.  One-variable entries scan n over the range;
two-variable entries scan the full square.  Entries whose statement only
makes sense for positive indices (finite sums, integrality claims) skip the
out-of-domain indices and count them instead of failing them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .errors import InvalidRangeError, UnknownIdentityError
from .quadfield import QuadElement, Rational, SquarefreeD
from .sequences import SeqContext, Unit, context_for_unit


def _delta_pow(delta: int, n: int) -> int:
    return delta if n & 1 else 1


class _LazyTerms(dict):
    """dict n -> term, filled outward from {0, 1} by the recurrence."""

    def __init__(self, v0, v1, two_a: int, delta: int):
        super().__init__({0: v0, 1: v1})
        self._lo = 0
        self._hi = 1
        self._ta = two_a
        self._dl = delta

    def __missing__(self, n: int):
        ta, dl = self._ta, self._dl
        while self._hi < n:
            k = self._hi
            self[k + 1] = -dl * self[k - 1] + ta * self[k]
            self._hi = k + 1
        while self._lo > n:
            k = self._lo
            self[k - 1] = dl * (ta * self[k] - self[k + 1])
            self._lo = k - 1
        return self[n]


class _LazyPowers(dict):
    """dict n -> unit**n, filled outward by multiplying with u or 1/u."""

    def __init__(self, element: QuadElement):
        super().__init__({0: QuadElement.one(element.d), 1: element})
        self._lo = 0
        self._hi = 1
        self._up = element
        self._down = element.inverse()

    def __missing__(self, n: int):
        while self._hi < n:
            self[self._hi + 1] = self[self._hi] * self._up
            self._hi += 1
        while self._lo > n:
            self[self._lo - 1] = self[self._lo] * self._down
            self._lo -= 1
        return self[n]


class _TermView:
    """Shared per-context caches and constants for the scan functions."""

    def __init__(self, ctx: SeqContext):
        self.ctx = ctx
        self.delta = ctx.delta
        self.a = ctx.a
        self.b = ctx.b
        self.b2d = self.b * self.b * ctx.d.d
        self.b2d_over_a = self.b2d / self.a
        self.inv_2a = 1 / (2 * self.a)
        self.inv_2a2 = 1 / (2 * self.a * self.a)
        self.F = _LazyTerms(0, 1, ctx.two_a, ctx.delta)
        self.L = _LazyTerms(Fraction(2, ctx.two_a), Fraction(1), ctx.two_a, ctx.delta)
        self._powers: _LazyPowers | None = None
        self._inv_fib: _LazyTerms | None = None

    @property
    def powers(self) -> _LazyPowers:
        if self._powers is None:
            self._powers = _LazyPowers(self.ctx.unit.element)
        return self._powers

    @property
    def inv_fib(self) -> _LazyTerms:
        """F terms of the context over the inverse unit."""
        if self._inv_fib is None:
            el = self.ctx.unit.element.inverse()
            inv_ctx = context_for_unit(Unit(el, int(el.norm())))
            self._inv_fib = _LazyTerms(0, 1, inv_ctx.two_a, inv_ctx.delta)
        return self._inv_fib


@dataclass(frozen=True)
class Counterexample:
    """A violating index tuple with the two exactly-evaluated sides."""

    indices: tuple[int, ...]
    lhs: Rational | QuadElement
    rhs: Rational | QuadElement


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    d: SquarefreeD
    index_range: tuple[int, int]
    passed: bool
    counterexamples: tuple[Counterexample, ...]
    skipped: int = 0


_Scan = Callable[[_TermView, int, int], tuple[int, list[Counterexample]]]


@dataclass(frozen=True)
class Identity:
    tag: str
    variables: str
    description: str
    scan: _Scan


def _bad(indices: tuple[int, ...], lhs, rhs) -> Counterexample:
    if isinstance(lhs, int):
        lhs = Fraction(lhs)
    if isinstance(rhs, int):
        rhs = Fraction(rhs)
    return Counterexample(indices, lhs, rhs)


# -- one-variable relations ----------------------------------------------------


def _scan_t7_i(v: _TermView, lo: int, hi: int):
    F, L, a = v.F, v.L, v.a
    bad = [
        _bad((n,), Fraction(F[n + 1]), a * (L[n] + F[n]))
        for n in range(lo, hi + 1)
        if a * (L[n] + F[n]) != F[n + 1]
    ]
    return 0, bad


def _scan_t7_ii(v: _TermView, lo: int, hi: int):
    F, L, a, c = v.F, v.L, v.a, v.b2d_over_a
    bad = [
        _bad((n,), L[n + 1], a * L[n] + c * F[n])
        for n in range(lo, hi + 1)
        if a * L[n] + c * F[n] != L[n + 1]
    ]
    return 0, bad


def _scan_t7_iii(v: _TermView, lo: int, hi: int):
    F, L, ad = v.F, v.L, v.a * v.delta
    bad = [
        _bad((n,), Fraction(F[n]), ad * (F[n + 1] - L[n + 1]))
        for n in range(lo, hi + 1)
        if ad * (F[n + 1] - L[n + 1]) != F[n]
    ]
    return 0, bad


def _scan_t7_iv(v: _TermView, lo: int, hi: int):
    F, L, a, c, dl = v.F, v.L, v.a, v.b2d_over_a, v.delta
    bad = [
        _bad((n,), L[n], dl * (a * L[n + 1] - c * F[n + 1]))
        for n in range(lo, hi + 1)
        if dl * (a * L[n + 1] - c * F[n + 1]) != L[n]
    ]
    return 0, bad


def _scan_t7_v(v: _TermView, lo: int, hi: int):
    F, L, a = v.F, v.L, v.a
    skipped, bad = 0, []
    for n in range(lo, hi + 1):
        if n < 1:  # the right side is an n-term sum
            skipped += 1
            continue
        lhs = F[n + 1] - a**n * F[1]
        rhs = sum(a ** (t + 1) * L[n - t] for t in range(n))
        if lhs != rhs:
            bad.append(_bad((n,), lhs, rhs))
    return skipped, bad


def _scan_t7_vi(v: _TermView, lo: int, hi: int):
    F, L, a, b2d = v.F, v.L, v.a, v.b2d
    skipped, bad = 0, []
    for n in range(lo, hi + 1):
        if n < 1:
            skipped += 1
            continue
        lhs = L[n + 1] - a**n * L[1]
        rhs = b2d * sum(a ** (t - 1) * F[n - t] for t in range(n))
        if lhs != rhs:
            bad.append(_bad((n,), lhs, rhs))
    return skipped, bad


def _scan_t7_ix(v: _TermView, lo: int, hi: int):
    F, L, b2d, a2, dl = v.F, v.L, v.b2d, v.a * v.a, v.delta
    bad = []
    for n in range(lo, hi + 1):
        lhs = b2d * F[n] * F[n] - a2 * L[n] * L[n]
        rhs = -_delta_pow(dl, n)
        if lhs != rhs:
            bad.append(_bad((n,), lhs, rhs))
    return 0, bad


def _scan_t8(v: _TermView, lo: int, hi: int):
    F, ta, dl = v.F, v.ctx.two_a, v.delta
    bad = [
        _bad((n,), Fraction(F[n + 2]), Fraction(-dl * F[n] + ta * F[n + 1]))
        for n in range(lo, hi + 1)
        if F[n + 2] != -dl * F[n] + ta * F[n + 1]
    ]
    return 0, bad


def _scan_t13(v: _TermView, lo: int, hi: int):
    L, ta, dl = v.L, v.ctx.two_a, v.delta
    bad = [
        _bad((n,), L[n + 2], -dl * L[n] + ta * L[n + 1])
        for n in range(lo, hi + 1)
        if L[n + 2] != -dl * L[n] + ta * L[n + 1]
    ]
    return 0, bad


def _scan_t21(v: _TermView, lo: int, hi: int):
    F, dl, eps = v.F, v.delta, v.ctx.unit.element
    bad = []
    for n in range(lo, hi + 1):
        lhs = v.powers[n]
        rhs = eps * F[n] - dl * F[n - 1]
        if lhs != rhs:
            bad.append(Counterexample((n,), lhs, rhs))
    return 0, bad


def _scan_cassini(v: _TermView, lo: int, hi: int):
    F, dl = v.F, v.delta
    bad = []
    for n in range(lo, hi + 1):
        lhs = F[n] * F[n] - F[n - 1] * F[n + 1]
        rhs = _delta_pow(dl, n - 1)
        if lhs != rhs:
            bad.append(_bad((n,), lhs, rhs))
    return 0, bad


def _scan_c17_i(v: _TermView, lo: int, hi: int):
    L = v.L
    skipped, bad = 0, []
    for k in range(lo, hi + 1):
        if k < 1:
            skipped += 1
            continue
        value = L[2 * k - 1]
        if value.denominator != 1 or value < 1:
            bad.append(_bad((k,), value, Fraction(max(1, int(value)))))
    return skipped, bad


def _scan_c17_ii_iii(v: _TermView, lo: int, hi: int):
    L = v.L
    a0 = abs(v.a.numerator)
    skipped, bad = 0, []
    for k in range(lo, hi + 1):
        if k < 1:
            skipped += 1
            continue
        value = a0 * L[2 * k]
        if value.denominator != 1 or gcd(a0, int(value)) != 1:
            bad.append(_bad((k,), value, Fraction(int(value))))
    return skipped, bad


def _scan_t26(v: _TermView, lo: int, hi: int):
    F, G, dl = v.F, v.inv_fib, v.delta
    bad = []
    for n in range(lo, hi + 1):
        lhs = G[n]
        rhs = F[-n] if dl == -1 else F[n]
        if lhs != rhs:
            bad.append(_bad((n,), lhs, rhs))
    return 0, bad


# -- two-variable relations ----------------------------------------------------


def _scan_t7_vii(v: _TermView, lo: int, hi: int):
    F, L, a = v.F, v.L, v.a
    bad = []
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            rhs = a * (F[m] * L[n] + F[n] * L[m])
            if rhs != F[m + n]:
                bad.append(_bad((m, n), Fraction(F[m + n]), rhs))
    return 0, bad


def _scan_t7_viii(v: _TermView, lo: int, hi: int):
    F, L, a, c = v.F, v.L, v.a, v.b2d_over_a
    bad = []
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            rhs = c * F[m] * F[n] + a * L[m] * L[n]
            if rhs != L[m + n]:
                bad.append(_bad((m, n), L[m + n], rhs))
    return 0, bad


def _scan_catalan(v: _TermView, lo: int, hi: int):
    F, dl = v.F, v.delta
    bad = []
    for n in range(lo, hi + 1):
        fn2 = F[n] * F[n]
        for m in range(lo, hi + 1):
            lhs = fn2 - F[n + m] * F[n - m]
            rhs = _delta_pow(dl, n - m) * F[m] * F[m]
            if lhs != rhs:
                bad.append(_bad((n, m), lhs, rhs))
    return 0, bad


def _scan_lucas_catalan(v: _TermView, lo: int, hi: int):
    L, dl, i2a, i2a2 = v.L, v.delta, v.inv_2a, v.inv_2a2
    bad = []
    for n in range(lo, hi + 1):
        ln2 = L[n] * L[n]
        dn = _delta_pow(dl, n)
        for r in range(lo, hi + 1):
            lhs = ln2 - L[n + r] * L[n - r]
            rhs = dn * i2a2 - _delta_pow(dl, n - r) * i2a * L[2 * r]
            if lhs != rhs:
                bad.append(_bad((n, r), lhs, rhs))
    return 0, bad


def _scan_docagne(v: _TermView, lo: int, hi: int):
    F, dl = v.F, v.delta
    bad = []
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            lhs = F[m] * F[n + 1] - F[n] * F[m + 1]
            rhs = _delta_pow(dl, n) * F[m - n]
            if lhs != rhs:
                bad.append(_bad((m, n), lhs, rhs))
    return 0, bad


def _scan_honsberger(v: _TermView, lo: int, hi: int):
    """Honsberger-type addition law, branching on delta.

    For delta = 1 the closed form is (a/(2b^2 d)) * (2a*L_{m+n} - 2*L_{m-n-1});
    dropping the factor 2 on the last term breaks the identity (first
    counterexample d = 3, m = n = 2), which the test suite pins.
    """
    F, L, dl = v.F, v.L, v.delta
    bad = []
    if dl == -1:
        for m in range(lo, hi + 1):
            for n in range(lo, hi + 1):
                lhs = F[m - 1] * F[n] + F[m] * F[n + 1]
                if lhs != F[m + n]:
                    bad.append(_bad((m, n), lhs, Fraction(F[m + n])))
        return 0, bad
    coeff = v.a / (2 * v.b2d)
    ta = v.ctx.two_a
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            lhs = F[m - 1] * F[n] + F[m] * F[n + 1]
            rhs = coeff * (ta * L[m + n] - 2 * L[m - n - 1])
            if lhs != rhs:
                bad.append(_bad((m, n), lhs, rhs))
    return 0, bad


def _scan_lucas_product(v: _TermView, lo: int, hi: int):
    L, dl, i2a = v.L, v.delta, v.inv_2a
    bad = []
    for n in range(lo, hi + 1):
        dn_i2a = _delta_pow(dl, n) * i2a
        for r in range(lo, hi + 1):
            lhs = L[n] * L[n + r]
            rhs = i2a * L[2 * n + r] + dn_i2a * L[r]
            if lhs != rhs:
                bad.append(_bad((n, r), lhs, rhs))
    return 0, bad


_ENTRIES = (
    Identity("T7.i", "n", "F(n+1) = a*(L(n) + F(n))", _scan_t7_i),
    Identity("T7.ii", "n", "L(n+1) = a*L(n) + (b^2*d/a)*F(n)", _scan_t7_ii),
    Identity("T7.iii", "n", "F(n) = (a/delta)*(F(n+1) - L(n+1))", _scan_t7_iii),
    Identity(
        "T7.iv", "n", "L(n) = (1/delta)*(a*L(n+1) - (b^2*d/a)*F(n+1))", _scan_t7_iv
    ),
    Identity(
        "T7.v", "n", "F(n+1) - a^n*F(1) = sum_t a^(t+1)*L(n-t)", _scan_t7_v
    ),
    Identity(
        "T7.vi", "n", "L(n+1) - a^n*L(1) = b^2*d * sum_t a^(t-1)*F(n-t)", _scan_t7_vi
    ),
    Identity("T7.vii", "(m,n)", "F(m+n) = a*(F(m)*L(n) + F(n)*L(m))", _scan_t7_vii),
    Identity(
        "T7.viii",
        "(m,n)",
        "L(m+n) = (b^2*d/a)*F(m)*F(n) + a*L(m)*L(n)",
        _scan_t7_viii,
    ),
    Identity(
        "T7.ix", "n", "b^2*d*F(n)^2 - a^2*L(n)^2 = -delta^n", _scan_t7_ix
    ),
    Identity("T8", "n", "F(n+2) = -delta*F(n) + 2a*F(n+1)", _scan_t8),
    Identity("T13", "n", "L(n+2) = -delta*L(n) + 2a*L(n+1)", _scan_t13),
    Identity("T21", "n", "u^n = F(n)*u - F(n-1)*delta", _scan_t21),
    Identity(
        "T25.i",
        "(n,m)",
        "Catalan: F(n)^2 - F(n+m)*F(n-m) = delta^(n-m)*F(m)^2",
        _scan_catalan,
    ),
    Identity(
        "T25.ii",
        "n",
        "Cassini: F(n)^2 - F(n-1)*F(n+1) = delta^(n-1)",
        _scan_cassini,
    ),
    Identity(
        "T25.iii",
        "(n,r)",
        "L(n)^2 - L(n+r)*L(n-r) = delta^n/(2a^2) - delta^(n-r)*L(2r)/(2a)",
        _scan_lucas_catalan,
    ),
    Identity(
        "T25.iv",
        "(m,n)",
        "d'Ocagne: F(m)*F(n+1) - F(n)*F(m+1) = delta^n*F(m-n)",
        _scan_docagne,
    ),
    Identity(
        "T25.v",
        "(m,n)",
        "Honsberger: F(m-1)*F(n) + F(m)*F(n+1), branching on delta",
        _scan_honsberger,
    ),
    Identity(
        "T25.vi",
        "(n,r)",
        "L(n)*L(n+r) = L(2n+r)/(2a) + delta^n*L(r)/(2a)",
        _scan_lucas_product,
    ),
    Identity("C17.i", "k", "L(2k-1) is a positive integer", _scan_c17_i),
    Identity(
        "C17.ii_iii",
        "k",
        "a0*L(2k) is an integer coprime to a0 (a0 = numerator of a)",
        _scan_c17_ii_iii,
    ),
    Identity(
        "T26",
        "n",
        "inverse-unit F(n) equals F(-n) when delta = -1, F(n) when delta = 1",
        _scan_t26,
    ),
)

CATALOG: dict[str, Identity] = {entry.tag: entry for entry in _ENTRIES}
TAGS: tuple[str, ...] = tuple(CATALOG)


def _run(view: _TermView, identity: Identity, lo: int, hi: int) -> IdentityReport:
    skipped, bad = identity.scan(view, lo, hi)
    return IdentityReport(
        identity=identity.tag,
        d=view.ctx.d,
        index_range=(lo, hi),
        passed=not bad,
        counterexamples=tuple(bad),
        skipped=skipped,
    )


def verify(
    ctx: SeqContext, identity: str | Identity, index_range: tuple[int, int]
) -> IdentityReport:
    """Scan one identity over the range; two-variable entries scan the square."""
    tag = identity.tag if isinstance(identity, Identity) else identity
    if tag not in CATALOG:
        raise UnknownIdentityError(tag)
    lo, hi = index_range
    if lo > hi:
        raise InvalidRangeError(f"empty index range {lo}..{hi}")
    return _run(_TermView(ctx), CATALOG[tag], lo, hi)


def verify_all(ctx: SeqContext, index_range: tuple[int, int]) -> list[IdentityReport]:
    """Run the whole catalog in tag order, sharing one term cache."""
    lo, hi = index_range
    if lo > hi:
        raise InvalidRangeError(f"empty index range {lo}..{hi}")
    view = _TermView(ctx)
    return [_run(view, CATALOG[tag], lo, hi) for tag in TAGS]

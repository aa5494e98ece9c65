"""Certified real intervals with exact rational endpoints.

An IntervalReal [lo, hi] asserts lo <= x <= hi for the represented real x.
All endpoint arithmetic is exact; explicit `round_out` calls trade endpoint
size for width, always outward, so containment is never lost.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Union

from .errors import InsufficientPrecisionError, PreconditionError

Scalar = Union[int, Fraction]

DEFAULT_DIGIT_CAP = 4096


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def inth_root_floor(x: int, n: int) -> int:
    """floor(x**(1/n)) for x >= 0, n >= 1, by integer Newton iteration."""
    if x < 0 or n < 1:
        raise PreconditionError("inth_root_floor needs x >= 0, n >= 1")
    if x in (0, 1) or n == 1:
        return x
    # initial overestimate from bit length
    r = 1 << -(-x.bit_length() // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            break
        r = nr
    while r ** n > x:
        r -= 1
    return r


def _decimal_digits(n: int) -> int:
    """Exact count of decimal digits of |n|, without str() (which caps size)."""
    n = abs(n)
    if n == 0:
        return 1
    d = (n.bit_length() * 30103) // 100000   # floor(bits * log10(2)) underestimates
    while 10 ** (d + 1) <= n:
        d += 1
    while 10 ** d > n:
        d -= 1
    return d + 1


def round_down(f: Fraction, digits: int) -> Fraction:
    """Largest multiple of 10^-digits that is <= f."""
    scale = 10 ** digits
    return Fraction(f.numerator * scale // f.denominator, scale)

def round_up(f: Fraction, digits: int) -> Fraction:
    scale = 10 ** digits
    return Fraction(-((-f.numerator) * scale // f.denominator), scale)


def round_sig_down(f: Fraction, sig: int) -> Fraction:
    """Round toward -inf keeping ~sig significant decimal digits."""
    if f == 0:
        return f
    mag = _decimal_digits(f.numerator) - _decimal_digits(f.denominator)
    return round_down(f, max(0, sig - mag))

def round_sig_up(f: Fraction, sig: int) -> Fraction:
    if f == 0:
        return f
    mag = _decimal_digits(f.numerator) - _decimal_digits(f.denominator)
    return round_up(f, max(0, sig - mag))


class IntervalReal:
    """Closed interval with exact Fraction endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Scalar, hi: Scalar):
        lo, hi = _frac(lo), _frac(hi)
        if lo > hi:
            raise PreconditionError(f"interval endpoints out of order: {lo} > {hi}")
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, x: Scalar) -> "IntervalReal":
        x = _frac(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        return f"IntervalReal({self.lo}, {self.hi})"

    def __contains__(self, x) -> bool:
        if isinstance(x, IntervalReal):
            return self.lo <= x.lo and x.hi <= self.hi
        x = _frac(x)
        return self.lo <= x <= self.hi

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalReal):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- arithmetic (exact endpoints) ----------------------------------

    def __add__(self, other) -> "IntervalReal":
        other = self._coerce(other)
        return IntervalReal(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "IntervalReal":
        return IntervalReal(-self.hi, -self.lo)

    def __sub__(self, other) -> "IntervalReal":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntervalReal":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "IntervalReal":
        other = self._coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return IntervalReal(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "IntervalReal":
        other = self._coerce(other)
        if other.lo <= 0 <= other.hi:
            raise PreconditionError("interval division by interval containing 0")
        return self * IntervalReal(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other) -> "IntervalReal":
        return self._coerce(other) / self

    def __abs__(self) -> "IntervalReal":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return IntervalReal(0, max(-self.lo, self.hi))

    def pow_int(self, k: int, sig: Optional[int] = None) -> "IntervalReal":
        """Integer power; optional per-step outward rounding to `sig` significant digits."""
        if k < 0:
            return (Fraction(1) / self).pow_int(-k, sig)
        result = IntervalReal.point(1)
        base = self
        while k:
            if k & 1:
                result = result * base
                if sig is not None:
                    result = result.round_sig(sig)
            base = base * base
            if sig is not None:
                base = base.round_sig(sig)
            k >>= 1
        return result

    @staticmethod
    def _coerce(x) -> "IntervalReal":
        if isinstance(x, IntervalReal):
            return x
        return IntervalReal.point(_frac(x))

    # -- rounding / comparisons ---------------------------------------

    def round_out(self, digits: int) -> "IntervalReal":
        """Outward round endpoints to the 10^-digits grid (never narrows)."""
        return IntervalReal(round_down(self.lo, digits), round_up(self.hi, digits))

    def round_sig(self, sig: int) -> "IntervalReal":
        return IntervalReal(round_sig_down(self.lo, sig), round_sig_up(self.hi, sig))

    def intersect(self, other: "IntervalReal") -> "IntervalReal":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise PreconditionError("intersection of disjoint enclosures (inconsistent certificates)")
        return IntervalReal(lo, hi)

    def certainly_lt(self, other) -> bool:
        other = self._coerce(other)
        return self.hi < other.lo

    def certainly_le(self, other) -> bool:
        other = self._coerce(other)
        return self.hi <= other.lo

    def certainly_gt(self, other) -> bool:
        other = self._coerce(other)
        return self.lo > other.hi

    def certainly_ge(self, other) -> bool:
        other = self._coerce(other)
        return self.lo >= other.hi

    def certainly_nonzero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def decimal_str(self, digits: int = 12) -> str:
        """Outward-rounded decimal rendering 'lo..hi' (for reports)."""
        r = self.round_out(digits)
        def fmt(f: Fraction) -> str:
            scaled = f * 10 ** digits
            n = scaled.numerator // scaled.denominator
            sign = "-" if n < 0 else ""
            n = abs(n)
            s = str(n).rjust(digits + 1, "0")
            return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"
        return f"{fmt(r.lo)}..{fmt(r.hi)}"


def frac_nth_root(f: Fraction, n: int, digits: int) -> IntervalReal:
    """Enclosure of f**(1/n) for f >= 0: endpoints on the 10^-digits grid."""
    f = _frac(f)
    if f < 0 or n < 1:
        raise PreconditionError("frac_nth_root needs f >= 0, n >= 1")
    if f == 0:
        return IntervalReal.point(0)
    scale = 10 ** digits
    # lo = floor(f^{1/n} * scale)/scale via integer root of floor(f * scale^n)
    m = (f.numerator * scale ** n) // f.denominator
    lo = inth_root_floor(m, n)
    hi = lo if lo ** n * f.denominator == f.numerator * scale ** n else lo + 1
    return IntervalReal(Fraction(lo, scale), Fraction(hi, scale))


def frac_pow(f: Fraction, e: Fraction, digits: int) -> IntervalReal:
    """Enclosure of f**e for rational f > 0 and rational exponent e."""
    f, e = _frac(f), _frac(e)
    if f <= 0:
        raise PreconditionError("frac_pow needs positive base")
    if e == 0 or f == 1:
        return IntervalReal.point(1)
    if e < 0:
        inner = frac_pow(f, -e, digits + 2)
        return (Fraction(1) / inner).round_sig(digits)
    a, b = e.numerator, e.denominator
    powed = f ** a  # exact rational
    if b == 1:
        return IntervalReal.point(powed)
    # relative-precision root: scale into a comfortable window first
    return frac_nth_root_rel(powed, b, digits)


def frac_nth_root_rel(f: Fraction, n: int, sig: int) -> IntervalReal:
    """Enclosure of f**(1/n), f > 0, with ~sig significant digits."""
    f = _frac(f)
    if f <= 0 or n < 1:
        raise PreconditionError("frac_nth_root_rel needs f > 0, n >= 1")
    # choose k so that f * 10^(n*k) has at least sig*n digits, then root once
    mag = _decimal_digits(f.numerator) - _decimal_digits(f.denominator)
    k = max(0, sig + 2 - (mag // n))
    scale = 10 ** k
    m = (f.numerator * scale ** n) // f.denominator
    lo = inth_root_floor(m, n)
    hi = lo if lo ** n * f.denominator == f.numerator * scale ** n else lo + 1
    return IntervalReal(Fraction(lo, scale), Fraction(hi, scale))


Producer = Callable[[int], IntervalReal]


class CertifiedReal:
    """A real number backed by a producer: digits -> enclosure of width <= 10^-digits.

    Successive enclosures are intersected, so refinement never widens.
    """

    def __init__(self, producer: Producer, name: str = "", digit_cap: int = DEFAULT_DIGIT_CAP):
        self._producer = producer
        self.name = name
        self.digit_cap = digit_cap
        self._best: Optional[IntervalReal] = None
        self._best_digits = 0

    def enclosure(self, digits: int) -> IntervalReal:
        if self._best is not None and self._best_digits >= digits:
            return self._best
        if digits > self.digit_cap:
            raise InsufficientPrecisionError(
                f"requested {digits} digits exceeds cap {self.digit_cap} for {self.name or 'value'}")
        fresh = self._producer(digits)
        if self._best is not None:
            fresh = fresh.intersect(self._best)
        self._best = fresh
        self._best_digits = digits
        return fresh

    def refine(self, width: Fraction) -> IntervalReal:
        """Smallest cached enclosure with width <= `width` (escalates the producer)."""
        width = _frac(width)
        if width <= 0:
            raise PreconditionError("target width must be positive")
        digits = max(1, self._best_digits or 1)
        iv = self.enclosure(digits)
        while iv.width > width:
            if digits >= self.digit_cap:
                raise InsufficientPrecisionError(
                    f"cannot reach width {width} within digit cap {self.digit_cap}")
            digits = min(self.digit_cap, max(digits * 2, _width_digits(width) + 1))
            iv = self.enclosure(digits)
        return iv


def _width_digits(width: Fraction) -> int:
    """Smallest d with 10^-d <= width ... i.e. digits needed to hit `width`."""
    d = 0
    w = Fraction(1)
    while w > width:
        w /= 10
        d += 1
    return d


def interval_refine(producer: Producer, width: Fraction, name: str = "",
                    digit_cap: int = DEFAULT_DIGIT_CAP) -> IntervalReal:
    """One-shot refinement of a producer to a target width."""
    return CertifiedReal(producer, name=name, digit_cap=digit_cap).refine(width)

"""Certified b-ary digit expansion, repetition statistics, and the
convergents built from repeated digit blocks.

A digit a_i (1-indexed after the radix point) is *certified* when the value's
enclosure lies inside a single cell of the b^-i grid, so no refinement can
change it.  The repetition count of pattern length t at position n is the
largest ell with (a_n ... a_{n+t-1}) repeated ell times starting at n; it is
only reported when enough certified digits exist to see the repetition break.

The block convergent at (t, n) has q_n = b^{n-1}(b^t - 1) and matches the
value's first n + t*count - 1 digits.  The classical floor-identity argument
gives |value - p_n/q_n| <= b / b^{n + t*count}; the stronger numerator (b-1)
is also checked and reported separately, since it fails for blocks flush
against a carry boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .catalog import GFunctionSystem
from .constants import ConstantsConfig, compute_constants
from .errors import InsufficientDigitsError, PreconditionError
from .intervals import CertifiedReal, IntervalReal
from .transcend import log_frac
from .verify import value_producer

Value = Union[Fraction, int, CertifiedReal]


@dataclass
class DigitString:
    base: int
    integer_part: int
    digits: tuple[int, ...]       # fractional digits a_1 a_2 ..., each in [0, base)
    certified_len: int
    exact: bool = False           # expansion of an exact rational (terminating convention)

    def digit(self, i: int) -> int:
        """1-indexed fractional digit a_i; must be certified."""
        if not (1 <= i <= self.certified_len):
            raise InsufficientDigitsError(
                f"digit {i} beyond certified length {self.certified_len}; extend expansion")
        return self.digits[i - 1]

    def as_str(self, limit: Optional[int] = None) -> str:
        n = self.certified_len if limit is None else min(limit, self.certified_len)
        if self.base <= 10:
            return "".join(str(d) for d in self.digits[:n])
        return " ".join(str(d) for d in self.digits[:n])

    def floor_scaled(self, i: int) -> int:
        """floor(value * base^i) reconstructed from the certified digits."""
        if i > self.certified_len:
            raise InsufficientDigitsError("extend expansion")
        out = self.integer_part
        for k in range(i):
            out = out * self.base + self.digits[k]
        return out


def _expand_exact(value: Fraction, base: int, count: int) -> DigitString:
    fl = value.numerator // value.denominator
    frac = value - fl
    digits = []
    for _ in range(count):
        frac *= base
        d = frac.numerator // frac.denominator
        digits.append(int(d))
        frac -= d
    return DigitString(base=base, integer_part=fl, digits=tuple(digits),
                       certified_len=count, exact=True)


def expand_digits(value: Value, base: int, count: int,
                  digit_cap: int = 1 << 14) -> DigitString:
    """Certified expansion to `count` fractional digits.

    Exact rationals expand by long division (terminating values continue with
    zeros).  Certified values refine until the enclosure settles inside one
    cell at depth `count`; if the cap is hit first, the returned
    certified_len is the deepest level that did settle.
    """
    if base < 2:
        raise PreconditionError("base must be >= 2")
    if count < 1:
        raise PreconditionError("count must be >= 1")
    if isinstance(value, (int, Fraction)):
        return _expand_exact(Fraction(value), base, count)

    # decimal digits needed so the interval is narrower than one cell at depth count
    need = 1
    cell = Fraction(1, base ** (count + 1))
    while Fraction(1, 10 ** need) > cell:
        need += 1
    digits_prec = need + 2
    scale = base ** count
    while True:
        iv = value.enclosure(min(digits_prec, digit_cap))
        lo_scaled = iv.lo * scale
        hi_scaled = iv.hi * scale
        lo = lo_scaled.numerator // lo_scaled.denominator
        hi = hi_scaled.numerator // hi_scaled.denominator
        if lo == hi:
            return _digits_from_floor(lo, base, count)
        if digits_prec >= digit_cap:
            # settle for the deepest level where the cell is unambiguous
            for lvl in range(count - 1, 0, -1):
                s = base ** lvl
                flo = (iv.lo * s).numerator // (iv.lo * s).denominator
                fhi = (iv.hi * s).numerator // (iv.hi * s).denominator
                if flo == fhi:
                    return _digits_from_floor(flo, base, lvl)
            raise InsufficientDigitsError("no digit certifiable at precision cap")
        digits_prec = min(digit_cap, digits_prec * 2)


def _digits_from_floor(scaled_floor: int, base: int, count: int) -> DigitString:
    digits = []
    x = scaled_floor
    for _ in range(count):
        digits.append(x % base)
        x //= base
    return DigitString(base=base, integer_part=x, digits=tuple(reversed(digits)),
                       certified_len=count)


def repetition_count(ds: DigitString, t: int, n: int) -> int:
    """Largest ell such that the digit block at n of length t repeats ell times.

    Requires enough certified digits to witness the end of the run:
    n + t*(ell+1) - 1 <= certified_len.
    """
    if t < 1 or n < 1:
        raise PreconditionError("need t >= 1 and n >= 1")
    if n + 2 * t - 1 > ds.certified_len:
        raise InsufficientDigitsError(
            f"need digits through {n + 2 * t - 1}, certified {ds.certified_len}; extend expansion")
    block = [ds.digit(n + i) for i in range(t)]
    ell = 1
    while True:
        start = n + ell * t
        if start + t - 1 > ds.certified_len:
            raise InsufficientDigitsError(
                f"repetition still running at certified digit {ds.certified_len}; extend expansion")
        if all(ds.digit(start + i) == block[i] for i in range(t)):
            ell += 1
        else:
            return ell


@dataclass
class BlockConvergent:
    t: int
    n: int
    count: int                   # repetition count at (t, n)
    p_n: int
    q_n: int
    bound: Fraction              # (base-1) / base^{n + t*count}
    bound_relaxed: Fraction      # base / base^{n + t*count} (always provable)
    holds: Optional[bool]
    holds_relaxed: Optional[bool]
    distance: IntervalReal


def theorem2_convergent(ds: DigitString, value: Value, t: int, n: int,
                        cap: int = 1 << 14) -> BlockConvergent:
    """Build the block convergent p_n/q_n and certify the digit-match bounds."""
    count = repetition_count(ds, t, n)
    b = ds.base
    q_n = b ** (n - 1) * (b ** t - 1)
    head = ds.floor_scaled(n - 1) if n > 1 else ds.integer_part
    tail = 0
    for i in range(t):
        tail = tail * b + ds.digit(n + i)
    p_n = (b ** t - 1) * head + tail
    bound = Fraction(b - 1, b ** (n + t * count))
    bound_relaxed = Fraction(b, b ** (n + t * count))

    target = Fraction(p_n, q_n)
    if isinstance(value, (int, Fraction)):
        dist = abs(Fraction(value) - target)
        iv = IntervalReal.point(dist)
        return BlockConvergent(t=t, n=n, count=count, p_n=p_n, q_n=q_n,
                               bound=bound, bound_relaxed=bound_relaxed,
                               holds=dist <= bound, holds_relaxed=dist <= bound_relaxed,
                               distance=iv)

    digits = 24
    holds = holds_relaxed = None
    while True:
        iv = abs(value.enclosure(digits) - target)
        if holds is None:
            if iv.hi <= bound:
                holds = True
            elif iv.lo > bound:
                holds = False
        if holds_relaxed is None:
            if iv.hi <= bound_relaxed:
                holds_relaxed = True
            elif iv.lo > bound_relaxed:
                holds_relaxed = False
        if holds is not None and holds_relaxed is not None:
            return BlockConvergent(t=t, n=n, count=count, p_n=p_n, q_n=q_n,
                                   bound=bound, bound_relaxed=bound_relaxed,
                                   holds=holds, holds_relaxed=holds_relaxed,
                                   distance=iv)
        if digits >= cap:
            return BlockConvergent(t=t, n=n, count=count, p_n=p_n, q_n=q_n,
                                   bound=bound, bound_relaxed=bound_relaxed,
                                   holds=holds, holds_relaxed=holds_relaxed,
                                   distance=iv)
        digits *= 2


@dataclass
class RepetitionProfile:
    t: int
    window: tuple[int, int]
    values: list[tuple[int, int]]          # (n, repetition count)
    max_ratio: Fraction                    # max over window of count/n
    empirical_vb: Optional[Fraction]       # descriptive fit, NOT certified


def repetition_profile(ds: DigitString, t: int, window: tuple[int, int],
                       value: Optional[CertifiedReal] = None,
                       fit_samples: int = 24) -> RepetitionProfile:
    """Repetition counts over a window, plus a descriptive approximation-exponent fit."""
    n_lo, n_hi = window
    if n_lo < 1 or n_hi < n_lo:
        raise PreconditionError("window must satisfy 1 <= n_lo <= n_hi")
    values = []
    max_ratio = Fraction(0)
    for n in range(n_lo, n_hi + 1):
        cnt = repetition_count(ds, t, n)
        values.append((n, cnt))
        ratio = Fraction(cnt, n)
        if ratio > max_ratio:
            max_ratio = ratio
    vb = _empirical_exponent(ds, value, fit_samples) if value is not None else None
    return RepetitionProfile(t=t, window=window, values=values,
                             max_ratio=max_ratio, empirical_vb=vb)


def _empirical_exponent(ds: DigitString, value: CertifiedReal, samples: int) -> Fraction:
    """max_m of the exponent e with |value - n/b^m| = b^{-e m} at the nearest n.

    Descriptive only: computed from midpoints at fixed precision.
    """
    b = ds.base
    m_max = max(2, ds.certified_len - 2)
    step = max(1, m_max // samples)
    best = Fraction(0)
    logb = log_frac(Fraction(b), 12)
    for m in range(2, m_max + 1, step):
        near = ds.floor_scaled(m)
        cands = [near, near + 1]
        digits = 12
        while True:
            iv = value.enclosure(digits)
            dists = [abs(iv - Fraction(c, b ** m)) for c in cands]
            dist = min(dists, key=lambda d: d.lo)
            if dist.lo > 0:
                break
            digits *= 2
            if digits > 1 << 12:
                dist = None
                break
        if dist is None:
            continue
        # e = -log(dist) / (m log b), crude midpoint arithmetic
        ln = log_frac(dist.midpoint(), 12) if dist.midpoint() > 0 else None
        if ln is None:
            continue
        e_mid = -ln.midpoint() / (m * logb.midpoint())
        e_frac = Fraction(round(e_mid * 1000), 1000)
        if e_frac > best:
            best = e_frac
    return best


def profile_with_expansion(value: Value, base: int, t: int,
                           window: tuple[int, int],
                           count: Optional[int] = None,
                           max_count: int = 1 << 14) -> tuple[DigitString, RepetitionProfile]:
    """Expand far enough that every repetition count in the window certifies.

    max_count stops the retry loop on values whose expansion is eventually
    periodic (a repetition that never breaks cannot be counted).
    """
    if count is None:
        count = window[1] + 4 * t + 16
    cval = value if isinstance(value, CertifiedReal) else None
    while True:
        ds = expand_digits(value, base, count)
        try:
            return ds, repetition_profile(ds, t, window, value=cval)
        except InsufficientDigitsError:
            if count >= max_count:
                raise
            count = min(max_count, count * 3 // 2 + t)


@dataclass
class Theorem2Report:
    system_name: str
    a: int
    b: int
    s: int
    t: int
    eps: Fraction
    window: tuple[int, int]
    profile: RepetitionProfile
    empirical_ok: bool                     # max_ratio <= eps / t
    hyp_growth_ok: Optional[bool]          # b^s > (c1 |a|)^{c2}
    hyp_digit_ok: Optional[bool]           # b^s >= (|a|+1)^{2 c4 / eps}
    digits_used: int


def theorem2_bound_check(sys: GFunctionSystem, a: int, b: int, s: int, t: int,
                         eps: Fraction, window: tuple[int, int],
                         config: Optional[ConstantsConfig] = None,
                         j: Optional[int] = None, digits: int = 64) -> Theorem2Report:
    """Empirical repetition profile of F(a/b^s) in base b plus hypothesis flags."""
    eps = Fraction(eps)
    if eps <= 0 or t < 1 or s < 1:
        raise PreconditionError("need eps > 0, t >= 1, s >= 1")
    j = sys.N if j is None else j
    work_sys, aa = (sys, a) if a > 0 else (sys.negated(), -a)
    z = Fraction(aa, b ** s)
    if sys.C * z >= 1:
        raise PreconditionError("C |a|/b^s must be < 1")
    value = value_producer(work_sys, j, z)

    ds, profile = profile_with_expansion(value, b, t, window)
    count = ds.certified_len

    constants = compute_constants(work_sys, aa, b, Fraction(t), max(1, s), config,
                                  digits=digits, allow_desk_scale=True)
    # b^s > (c1 |a|)^{c2}: via logs
    logbs = s * log_frac(Fraction(b), digits)
    coef, e_exp = constants.c1_sym
    log_c1a = log_frac(coef * aa, digits) + IntervalReal.point(e_exp)
    need1 = constants.c2 * log_c1a
    hyp1 = True if logbs.lo > need1.hi else False if logbs.hi <= need1.lo else None
    need2 = constants.c4 * 2 / eps * log_frac(Fraction(aa + 1), digits)
    hyp2 = True if logbs.lo >= need2.hi else False if logbs.hi < need2.lo else None

    return Theorem2Report(system_name=sys.name, a=a, b=b, s=s, t=t, eps=eps,
                          window=window, profile=profile,
                          empirical_ok=profile.max_ratio <= eps / t,
                          hyp_growth_ok=hyp1, hyp_digit_ok=hyp2,
                          digits_used=count)

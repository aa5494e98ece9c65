"""Certified evaluation of system components and the rational-approximation
inequality chain: the nonzero integer witness xi, the remainder-smallness
check, and the resulting lower bounds on |F(a/b) - n/(B b^m)|.

The headline inequality (distance >= 1/(B b^m (|a|+1)^{c4 m})) is certified by
interval evaluation.  Its proof chain is replayed in "property mode" at
desk-scale (p, q, h): the hypotheses on b are astronomically large for any
interesting system, so property mode verifies the chain's inequalities
directly (exact remainder-smallness at the chosen parameters) instead of
pretending the schedule applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .catalog import GFunctionSystem
from .constants import ConstantsConfig, ConstantsReport, compute_constants
from .derivation import IteratedFamily, ell0_bound, find_nonvanishing_index, iterate
from .errors import (InsufficientPrecisionError, InternalCertificateError,
                     NoConvergentTailBound, PreconditionError)
from .intervals import CertifiedReal, IntervalReal, frac_pow
from .pade import build_approximant
from .transcend import log_frac

Scalar = Union[int, Fraction]


def eval_certified(sys: GFunctionSystem, j: int, z: Scalar, width: Fraction) -> IntervalReal:
    """Interval of width <= `width` containing F_j(z), for C|z| < 1.

    Partial sum plus the geometric tail bound sum_{n>M} C^{n+1} |z|^n.
    """
    z = Fraction(z)
    width = Fraction(width)
    if width <= 0:
        raise PreconditionError("width must be positive")
    if not (0 <= j <= sys.N):
        raise PreconditionError(f"component {j} out of range 0..{sys.N}")
    cz = sys.C * abs(z)
    if z != 0 and cz >= 1:
        raise NoConvergentTailBound(
            f"C|z| = {cz} >= 1: no convergent tail bound for this evaluation")
    if z == 0:
        return IntervalReal.point(sys.coefficient(j, 0))

    # smallest M with tail = C * cz^{M+1} / (1 - cz) <= width/2
    target = width / 2
    tail = sys.C * cz / (1 - cz)
    M = 0
    while tail > target:
        tail *= cz
        M += 1
    total = Fraction(0)
    zpow = Fraction(1)
    for nn in range(M + 1):
        c = sys.coefficient(j, nn)
        if c:
            total += c * zpow
        zpow *= z
    iv = IntervalReal(total - tail, total + tail)
    # outward-round to keep endpoint sizes proportional to the request
    grid = 1
    wq = width / 4
    while Fraction(1, 10 ** grid) > wq:
        grid += 1
    return iv.round_out(grid)


def value_producer(sys: GFunctionSystem, j: int, z: Scalar,
                   digit_cap: int = 1 << 14) -> CertifiedReal:
    """CertifiedReal for F_j(z); raises up front when no tail bound converges."""
    z = Fraction(z)
    if z != 0 and sys.C * abs(z) >= 1:
        raise NoConvergentTailBound("C|z| >= 1: no convergent tail bound")
    cache = getattr(sys, "_value_cache", None)
    if cache is None:
        cache = {}
        sys._value_cache = cache
    key = (j, z, digit_cap)
    if key not in cache:
        cache[key] = CertifiedReal(
            lambda digits: eval_certified(sys, j, z, Fraction(1, 10 ** digits)),
            name=f"{sys.name}:F_{j}({z})", digit_cap=digit_cap)
    return cache[key]


@dataclass
class XiWitness:
    """The nonzero integer witness xi = d_* b^* (n Q_k(a/b) - B b^m P_{j,k}(a/b))."""
    k: int
    U_jk: int      # d_* b^{p+(d-1)k} P_{j,k}(a/b)
    V_k: int       # b^{q+(d-1)k} Q_k(a/b)
    xi: int
    divisible_by_bm: bool
    a: int
    b: int
    B: int
    m: int
    n: int
    j: int
    denominator_scale: int   # d_{p+(d-1)k}


def construct_xi(fam: IteratedFamily, sys: GFunctionSystem, a: int, b: int,
                 B: int, m: int, n: int, j: int, k: Optional[int] = None) -> XiWitness:
    """Exact witness integer at index k (found automatically when omitted).

    Computed twice: once through the integer forms U, V and once by direct
    rational arithmetic; both must agree to the bit.
    """
    base = fam.base
    p, q, h, d = base.p, base.q, base.h, sys.d
    if p < q + m:
        raise PreconditionError(f"need p >= q+m for b^m divisibility, got p={p} q+m={q + m}")
    ab = Fraction(a, b)
    if sys.D_poly(ab) == 0:
        raise PreconditionError("a/b is a root of the system denominator polynomial")
    if k is None:
        k = find_nonvanishing_index(fam, sys, ab, n, B, m, j)
    dd = sys.denominator(p + (d - 1) * k)
    bpow = b ** (p + (d - 1) * k)

    Qk_val = fam.Q(k)(ab)
    Pjk_val = fam.P(j, k)(ab)
    U = dd * bpow * Pjk_val
    V = b ** (q + (d - 1) * k) * Qk_val
    if U.denominator != 1 or V.denominator != 1:
        raise InternalCertificateError("integrality of U/V failed; scaling bug")
    U, V = int(U), int(V)

    xi_direct = dd * bpow * (n * Qk_val - B * b ** m * Pjk_val)
    if xi_direct.denominator != 1:
        raise InternalCertificateError("xi is not an integer; scaling bug")
    xi_int = n * dd * b ** (p - q) * V - B * b ** m * U
    if xi_int != int(xi_direct):
        raise InternalCertificateError("two computations of xi disagree")
    if xi_int == 0:
        raise InternalCertificateError("xi = 0 contradicts the nonvanishing index")
    return XiWitness(k=k, U_jk=U, V_k=V, xi=xi_int,
                     divisible_by_bm=(xi_int % b ** m == 0),
                     a=a, b=b, B=B, m=m, n=n, j=j, denominator_scale=dd)


@dataclass
class ChainReplay:
    p: int
    q: int
    h: int
    k: int
    witness: XiWitness
    eq_remainder_small: Optional[bool]   # |R_{j,k}(a/b)| < (1/2) / (d_* b^* B)
    eq_balance: Optional[bool]           # |Q_k||n - B b^m F_j| >= d_*^{-1} b^{-*+m} - B b^m |R|
    eq_distance: Optional[bool]          # distance >= d_*^{-1} b^{-*} / (2 B |Q_k(a/b)|)
    distance_lower: Fraction             # the chain's explicit lower bound

    @property
    def all_certified(self) -> bool:
        return (self.eq_remainder_small is True and self.eq_balance is True
                and self.eq_distance is True)


@dataclass
class VerifyReport:
    system_name: str
    a: int
    b: int
    B: int
    m: int
    n: int
    j: int
    lhs: IntervalReal
    rhs: Fraction
    rhs_exponent: int            # rhs ~ 1/(B b^m (|a|+1)^rhs_exponent)
    status: str                  # certified | violated | indeterminate
    constants: ConstantsReport
    hypothesis_ok: bool
    chain: Optional[ChainReplay] = None

    @property
    def holds(self) -> bool:
        return self.status == "certified"


def _decide_ge(value: CertifiedReal, threshold: Fraction,
               start_digits: int = 24, cap: int = 1 << 13) -> tuple[str, IntervalReal]:
    """Certify |value| >= threshold (or its failure) by refining the enclosure."""
    digits = start_digits
    while True:
        iv = abs(value.enclosure(digits))
        if iv.lo >= threshold:
            return "certified", iv
        if iv.hi < threshold:
            return "violated", iv
        if digits >= cap:
            return "indeterminate", iv
        digits *= 2


def verify_theorem1(sys: GFunctionSystem, a: int, b: int, B: int, m: int, n: int,
                    config: Optional[ConstantsConfig] = None, j: Optional[int] = None,
                    digits: int = 64, property_mode: bool = False,
                    pqh: Optional[tuple[int, int, int]] = None,
                    allow_desk_scale: bool = True) -> VerifyReport:
    """Certify |F_j(a/b) - n/(B b^m)| >= 1/(B b^m (|a|+1)^{c4 m}).

    Negative a is reduced through the z -> -z system transform.  In property
    mode the proof chain is replayed at the caller-chosen (p, q, h): build the
    approximant, iterate far enough for the nonvanishing scan, construct xi,
    then certify remainder-smallness, the balance inequality, and the
    resulting explicit distance bound.
    """
    if b < 2 or B < 1 or m < 1 or a == 0:
        raise PreconditionError("need b >= 2, B >= 1, m >= 1, a != 0")
    if abs(Fraction(a, b)) >= 1:
        raise PreconditionError("need |a/b| < 1")
    j = sys.N if j is None else j
    work_sys, aa = (sys, a) if a > 0 else (sys.negated(), -a)
    ab = Fraction(aa, b)

    # smallest integer t with B <= b^t
    t = 0
    while b ** t < B:
        t += 1
    constants = compute_constants(work_sys, aa, b, Fraction(t), m, config,
                                  digits=max(digits, 64), allow_desk_scale=allow_desk_scale)
    hyp_ok = constants.hyp_b_ok and not constants.desk_scale

    exp_floor = (constants.c4.lo * m).numerator // (constants.c4.lo * m).denominator
    rhs = Fraction(1, B * b ** m * (abs(a) + 1) ** exp_floor)

    value = value_producer(work_sys, j, ab)
    offset = Fraction(n, B * b ** m)
    dist = CertifiedReal(lambda dg: value.enclosure(dg) - offset,
                         name="distance", digit_cap=value.digit_cap)
    status, lhs_iv = _decide_ge(dist, rhs, start_digits=max(16, digits // 2))

    chain = None
    if property_mode:
        if pqh is None:
            raise PreconditionError("property mode needs explicit (p, q, h)")
        chain = replay_chain(work_sys, aa, b, B, m, n, j, pqh, value)

    return VerifyReport(system_name=sys.name, a=a, b=b, B=B, m=m, n=n, j=j,
                        lhs=lhs_iv, rhs=rhs, rhs_exponent=exp_floor, status=status,
                        constants=constants, hypothesis_ok=hyp_ok, chain=chain)


def replay_chain(sys: GFunctionSystem, a: int, b: int, B: int, m: int, n: int,
                 j: int, pqh: tuple[int, int, int], value: Optional[CertifiedReal] = None,
                 cap: int = 1 << 13) -> ChainReplay:
    """Replay the witness chain at explicit (p, q, h); every step certified."""
    p, q, h = pqh
    if p < q + m:
        raise PreconditionError("chain replay needs p >= q + m")
    ab = Fraction(a, b)
    approx = build_approximant(sys, p, q, h)
    kmax = ell0_bound(sys, p, q, h) + sys.N
    fam = iterate(approx, sys, kmax)
    k = find_nonvanishing_index(fam, sys, ab, n, B, m, j)
    witness = construct_xi(fam, sys, a, b, B, m, n, j, k=k)

    d = sys.d
    dd = witness.denominator_scale
    scale_exp = p + (d - 1) * k
    Qk_val = fam.Q(k)(ab)
    Pjk_val = fam.P(j, k)(ab)
    if value is None:
        value = value_producer(sys, j, ab)

    # |R_{j,k}(a/b)| < (1/2) d_*^{-1} b^{-*} B^{-1}, R = Q_k F_j - P_{j,k}
    thresh16 = Fraction(1, 2 * dd * b ** scale_exp * B)
    rem = CertifiedReal(lambda dg: Qk_val * value.enclosure(dg) - Pjk_val,
                        name="remainder", digit_cap=value.digit_cap)
    st16, rem_iv = _decide_lt(rem, thresh16, cap=cap)

    # |Q_k(a/b)| |n - B b^m F_j(a/b)| >= d_*^{-1} b^{-* + m} - B b^m |R_{j,k}(a/b)|
    target = Fraction(1, dd) * Fraction(1, b ** scale_exp) * b ** m
    st15 = None
    dg = 24
    while True:
        rv = abs(rem.enclosure(dg))
        fv = value.enclosure(dg)
        lhs15 = abs(Qk_val) * abs(n - B * b ** m * fv)
        rhs15 = IntervalReal.point(target) - B * b ** m * rv
        if lhs15.lo >= rhs15.hi:
            st15 = True
            break
        if lhs15.hi < rhs15.lo:
            st15 = False
            break
        if dg >= cap:
            break
        dg *= 2

    # distance >= d_*^{-1} b^{-*} / (2 B |Q_k(a/b)|)
    if Qk_val == 0:
        raise InternalCertificateError("Q_k(a/b) = 0 after remainder-smallness held")
    bound17 = Fraction(1, dd * b ** scale_exp) / (2 * B * abs(Qk_val))
    offset = Fraction(n, B * b ** m)
    dist = CertifiedReal(lambda dgt: value.enclosure(dgt) - offset,
                         name="distance", digit_cap=value.digit_cap)
    st17, _ = _decide_ge(dist, bound17, cap=cap)

    return ChainReplay(p=p, q=q, h=h, k=k, witness=witness,
                       eq_remainder_small=(st16 if st16 is not None else None),
                       eq_balance=st15,
                       eq_distance=(True if st17 == "certified"
                                    else False if st17 == "violated" else None),
                       distance_lower=bound17)


def _decide_lt(value: CertifiedReal, threshold: Fraction,
               start_digits: int = 24, cap: int = 1 << 13) -> tuple[Optional[bool], IntervalReal]:
    digits = start_digits
    while True:
        iv = abs(value.enclosure(digits))
        if iv.hi < threshold:
            return True, iv
        if iv.lo >= threshold:
            return False, iv
        if digits >= cap:
            return None, iv
        digits *= 2


def scan_nearest(sys: GFunctionSystem, a: int, b: int, B: int, m: int,
                 j: Optional[int] = None, cap: int = 1 << 13) -> int:
    """Nearest integer to B b^m F_j(a/b); exact half-ties round to even."""
    j = sys.N if j is None else j
    work_sys, aa = (sys, a) if a > 0 else (sys.negated(), -a)
    value = value_producer(work_sys, j, Fraction(aa, b))
    digits = 16
    scale = B * b ** m
    while True:
        iv = value.enclosure(digits) * scale
        lo_n = _round_half_even(iv.lo)
        hi_n = _round_half_even(iv.hi)
        if lo_n == hi_n:
            return lo_n
        if digits >= cap:
            raise InsufficientPrecisionError("nearest integer undecided at precision cap")
        digits *= 2


def _round_half_even(x: Fraction) -> int:
    fl = x.numerator // x.denominator
    frac2 = 2 * (x - fl)
    if frac2 < 1:
        return fl
    if frac2 > 1:
        return fl + 1
    return fl if fl % 2 == 0 else fl + 1


@dataclass
class CorollaryReport:
    eps: Fraction
    rhs: Fraction
    status: str
    hyp_b_ok: Optional[bool]     # b > (|a|+1)^{2 c4 / eps}
    hyp_m_ok: bool               # m >= 2 t / eps
    lhs: IntervalReal


def corollary_bound_check(sys: GFunctionSystem, a: int, b: int, B: int, m: int, n: int,
                          eps: Scalar, config: Optional[ConstantsConfig] = None,
                          j: Optional[int] = None, digits: int = 64) -> CorollaryReport:
    """Certify the simpler bound |F(a/b) - n/(B b^m)| >= 1/b^{m(1+eps)}.

    Hypothesis flags are reported (they fail at desk scale); the bound itself
    is still certified or refuted by intervals.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    j = sys.N if j is None else j
    work_sys, aa = (sys, a) if a > 0 else (sys.negated(), -a)
    t = 0
    while b ** t < B:
        t += 1
    constants = compute_constants(work_sys, aa, b, Fraction(t), m, config,
                                  digits=digits, allow_desk_scale=True)
    # b > (|a|+1)^{2 c4 / eps}: compare log b against (2 c4 / eps) log(|a|+1)
    logb = log_frac(Fraction(b), digits)
    need = constants.c4 * 2 / eps * log_frac(Fraction(abs(a) + 1), digits)
    hyp_b = True if logb.lo > need.hi else False if logb.hi <= need.lo else None
    hyp_m = m >= 2 * t / eps

    rhs = frac_pow(Fraction(1, b), m * (1 + eps), digits).hi
    value = value_producer(work_sys, j, Fraction(aa, b))
    offset = Fraction(n, B * b ** m)
    dist = CertifiedReal(lambda dg: value.enclosure(dg) - offset,
                         name="distance", digit_cap=value.digit_cap)
    status, lhs_iv = _decide_ge(dist, rhs)
    return CorollaryReport(eps=eps, rhs=rhs, status=status,
                           hyp_b_ok=hyp_b, hyp_m_ok=hyp_m, lhs=lhs_iv)

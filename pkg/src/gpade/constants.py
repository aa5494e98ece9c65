"""Quantitative bound chain: height/remainder bounds and the effective constants.

Two kinds of output live here.  The per-approximant bounds are exact
rationals: the Siegel-style height bound for iterated numerators and the
geometric remainder bound.  The constant chain (chi, c1..c8, the schedule
x, y, h, p, q, beta and the smallness hypothesis) mixes rationals with
certified enclosures of e-powers and logarithms; every interval field
contains its true real value and precision is user-settable.

h0, h1, h2 are knobs, not derived: the sources they come from are effective
but never instantiated numerically, so they enter only through
c5 = max(h0, h1, h2, 8 N^2 d^3, 4t) and are recorded in every report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .catalog import GFunctionSystem
from .derivation import IteratedFamily
from .errors import (HypothesisUnmetError, InsufficientPrecisionError,
                     PreconditionError)
from .intervals import IntervalReal, frac_pow
from .pade import PadeApproximant
from .polynomial import Poly
from .transcend import exp_frac, exp_interval, log2_enclosure, log_frac, log_interval

Scalar = Union[int, Fraction]

DEFAULT_DIGITS = 128


@dataclass(frozen=True)
class ConstantsConfig:
    """Configuration for the underived positive constants; defaults documented in README."""
    h0: Fraction = Fraction(1)
    h1: Fraction = Fraction(1)
    h2: Fraction = Fraction(1)

    def as_dict(self) -> dict:
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2}


# -- exact per-approximant bounds ------------------------------------------


def _require_verified(sys: GFunctionSystem, p: int, h: int) -> None:
    if sys.verified_range < p + h:
        raise PreconditionError(
            f"growth constants verified only to n={sys.verified_range}, need {p + h}; "
            "run verify_growth first")


def bound_height_Qk(approx: PadeApproximant, sys: GFunctionSystem, k: int,
                    digits: int = 32) -> Fraction:
    """Rational upper bound 2^{2q+(d-1)k+1} H(Dpoly)^k (q (CD)^{p+h+1})^{Nh/(q+1-Nh)}."""
    if k < 0:
        raise PreconditionError("k must be >= 0")
    p, q, h = approx.p, approx.q, approx.h
    _require_verified(sys, p, h)
    N, d = sys.N, sys.d
    H = sys.D_poly.height()
    Nh = N * h
    if Nh == 0:
        siegel_factor = Fraction(1)
    else:
        cd_hi = sys.CD(digits).hi
        base = q * cd_hi ** (p + h + 1)
        siegel_factor = frac_pow(base, Fraction(Nh, q + 1 - Nh), digits).hi
    return Fraction(2) ** (2 * q + (d - 1) * k + 1) * H ** k * siegel_factor


def _height_Qk(fam_or_approx, k: int) -> Fraction:
    if isinstance(fam_or_approx, IteratedFamily):
        return fam_or_approx.Qk[k].height()
    if isinstance(fam_or_approx, PadeApproximant):
        if k != 0:
            raise PreconditionError("pass an IteratedFamily for k > 0")
        return fam_or_approx.Q.height()
    raise PreconditionError("expected PadeApproximant or IteratedFamily")


def bound_remainder(fam_or_approx, sys: GFunctionSystem, k: int, z: Scalar) -> Fraction:
    """Rational bound on |Q_k F_j - P_{j,k}| at z, valid for every j, for C|z| < 1."""
    base = fam_or_approx.base if isinstance(fam_or_approx, IteratedFamily) else fam_or_approx
    p, q, h, d = base.p, base.q, base.h, sys.d
    cz = sys.C * abs(Fraction(z))
    if cz >= 1:
        raise PreconditionError(f"need C|z| < 1, got {cz}")
    Hk = _height_Qk(fam_or_approx, k)
    if cz == 0:
        return Fraction(0)
    expo = p + h + 1 - k
    return (Hk * (q + k * (d - 1) + 1) * max(Fraction(1), sys.C) ** (q + k * (d - 1))
            * cz ** expo / (1 - cz))


# -- the constant chain ------------------------------------------------------


@dataclass
class ConstantsReport:
    system_name: str
    a: int
    b: int
    t: Fraction
    m: int
    config: ConstantsConfig
    digits: int
    N: int
    d: int
    chi: IntervalReal
    chi_sym: Optional[tuple[Fraction, Fraction]]   # chi = coef * e^exponent when available
    c1: IntervalReal
    c1_sym: Optional[tuple[Fraction, Fraction]]
    c2: int
    c3: Fraction
    c5: Fraction
    c6: IntervalReal
    c7: IntervalReal
    c8: IntervalReal
    c4: IntervalReal
    c4_reference: Optional[IntervalReal]
    c4_discrepancy: bool
    y: Fraction
    x: Optional[IntervalReal]
    h: Optional[int]
    p: Optional[int]
    q: Optional[int]
    beta: Optional[IntervalReal]
    hyp_b_ok: bool              # b > (c1 |a|)^{c2}
    hyp_m_ok: Optional[bool]    # m >= c3 log(b)/log(|a|+1)
    eqhyp_status: str           # certified-true | certified-false | indeterminate | not-evaluated
    desk_scale: bool            # schedule infeasible at these inputs; c-chain still valid

    @property
    def eqhyp_ok(self) -> bool:
        return self.eqhyp_status == "certified-true"


def _log_sym(sym: Optional[tuple[Fraction, Fraction]], iv: IntervalReal,
             digits: int) -> IntervalReal:
    """log of a positive quantity, using coef*e^k structure when available."""
    if sym is not None:
        coef, e_exp = sym
        return log_frac(coef, digits) + IntervalReal.point(e_exp)
    return log_interval(iv, digits)


def _chain(sys: GFunctionSystem, digits: int):
    """chi and the b-independent constants, plus reusable symbolic pieces."""
    N, d = sys.N, sys.d
    H = sys.D_poly.height()
    C = sys.C
    cd_coef, cd_exp = sys.CD_sym()
    if sys.Dgrowth_sym is not None:
        d_coef, d_exp = sys.Dgrowth_sym
    else:
        d_coef, d_exp = sys.Dgrowth_rat, Fraction(0)

    chi_coef = 4 * H * C * cd_coef ** (8 * N * d + 1)
    chi_exp = cd_exp * (8 * N * d + 1)
    chi = (chi_coef * exp_frac(chi_exp, digits + 6)).round_sig(digits + 2) \
        if chi_exp else IntervalReal.point(chi_coef)
    chi_sym = (chi_coef, chi_exp)

    # c6 = D^{1 + d/((N+2)(d+1))} 2^{(8N+1)/(4N+8)} H^{1/(4(N+2)(d+1))} (CD)^{4N(N+3)(d+1)/(N+2)}
    a1 = 1 + Fraction(d, (N + 2) * (d + 1))
    a2 = Fraction(8 * N + 1, 4 * N + 8)
    a3 = Fraction(1, 4 * (N + 2) * (d + 1))
    a4 = Fraction(4 * N * (N + 3) * (d + 1), N + 2)
    g = digits + 8
    c6 = frac_pow(d_coef, a1, g) * frac_pow(Fraction(2), a2, g) * frac_pow(H, a3, g) \
        * frac_pow(cd_coef, a4, g)
    e_total = d_exp * a1 + cd_exp * a4
    if e_total:
        c6 = c6 * exp_frac(e_total, g)
    c6 = c6.round_sig(digits + 2)
    return chi, chi_sym, c6, (d_coef, d_exp)


def compute_constants(sys: GFunctionSystem, a: int, b: int, t: Scalar, m: int,
                      config: Optional[ConstantsConfig] = None,
                      digits: int = DEFAULT_DIGITS,
                      allow_desk_scale: bool = False) -> ConstantsReport:
    """Full constant chain and parameter schedule for one (a, b, t, m) instance.

    In strict mode the smallness hypothesis on b is enforced (error when the
    schedule quantity x fails x > N+1).  With allow_desk_scale the
    b-independent constants are still computed and the schedule fields are
    left unset, with all hypothesis flags reported false.
    """
    config = config or ConstantsConfig()
    t = Fraction(t)
    if a == 0 or b < 2 or t < 0 or m < 1:
        raise PreconditionError("need a != 0, b >= 2, t >= 0, m >= 1")
    N, d = sys.N, sys.d
    aa = abs(a)

    chi, chi_sym, c6, _ = _chain(sys, digits)
    c2 = 3 * (N + 2)
    y = Fraction(1, 4 * (d + 1))
    c5 = max(config.h0, config.h1, config.h2, Fraction(8 * N * N * d ** 3), 4 * t)
    c3 = c5 / 3

    log2 = log2_enclosure(digits + 6)
    logb = log_frac(Fraction(b), digits + 6)
    log_chia = _log_sym((chi_sym[0] * aa, chi_sym[1]), chi * aa, digits + 6)
    x = (logb / (3 * log_chia)).round_sig(digits + 2)

    c7 = (6 * (N + 2) ** 2 * _log_sym(chi_sym, chi, digits + 6)).round_sig(digits + 2)
    log_c6 = log_interval(c6, digits + 6)
    log_2c6 = log_c6 + log2
    c8 = (log_2c6 / log2 * c7).round_sig(digits + 2)
    c4 = (c8 + log_c6 / log2).round_sig(digits + 2)

    c4_ref, c4_disc = _reference_c4(sys, c4, digits)

    hyp_b_ok = x.lo > N + 2
    # hypothesis on m: m >= c3 log(b)/log(|a|+1)
    if aa >= 1:
        log_a1 = log_frac(Fraction(aa + 1), digits + 6)
        m_threshold = c3 * logb / log_a1
        hyp_m_ok = (True if m_threshold.hi <= m
                    else False if m_threshold.lo > m else None)
    else:
        hyp_m_ok = None

    schedule_ok = x.lo > N + 1
    infeasible = x.hi <= N + 1
    if not schedule_ok and not infeasible:
        # straddle: escalate once before judging
        return compute_constants(sys, a, b, t, m, config, digits * 2, allow_desk_scale)
    if infeasible and not allow_desk_scale:
        raise HypothesisUnmetError(
            f"hypothesis (smallness of (c1|a|)^c2 against b) fails: x <= {N + 1}")

    h = p = q = None
    beta = None
    eqhyp_status = "not-evaluated"
    if schedule_ok:
        h = _floor_certified(lambda dg: Fraction(m) / (log_frac(Fraction(b), dg)
                                                       / (3 * _log_sym((chi_sym[0] * aa, chi_sym[1]), chi * aa, dg))
                                                       - (N + 1)), digits)
        if h >= 1:
            p = _floor_certified(lambda dg: (log_frac(Fraction(b), dg)
                                             / (3 * _log_sym((chi_sym[0] * aa, chi_sym[1]), chi * aa, dg))) * h,
                                 digits)
            q_exact = (N + y) * h
            q = q_exact.numerator // q_exact.denominator
            beta = frac_pow(Fraction(b), t / h, digits + 2) if t else IntervalReal.point(1)

    report = ConstantsReport(
        system_name=sys.name, a=a, b=b, t=t, m=m, config=config, digits=digits,
        N=N, d=d, chi=chi, chi_sym=chi_sym, c1=chi, c1_sym=chi_sym, c2=c2,
        c3=c3, c5=c5, c6=c6, c7=c7, c8=c8, c4=c4,
        c4_reference=c4_ref, c4_discrepancy=c4_disc,
        y=y, x=x, h=h, p=p, q=q, beta=beta,
        hyp_b_ok=hyp_b_ok, hyp_m_ok=hyp_m_ok,
        eqhyp_status=eqhyp_status, desk_scale=not schedule_ok)
    if schedule_ok and h is not None and h >= 1:
        verdict = check_eqhyp(report, sys, a, b, digits=digits)
        report.eqhyp_status = ("certified-true" if verdict is True
                               else "certified-false" if verdict is False
                               else "indeterminate")
    return report


def _floor_certified(producer, digits: int, cap_factor: int = 8) -> int:
    """floor of an interval-valued quantity, escalating until both endpoints agree."""
    dg = digits
    while True:
        iv = producer(dg)
        flo = iv.lo.numerator // iv.lo.denominator
        fhi = iv.hi.numerator // iv.hi.denominator
        if flo == fhi:
            return flo
        if dg >= digits * cap_factor:
            raise InsufficientPrecisionError(
                "floor undecided at precision cap (value too close to an integer)")
        dg *= 2


def _reference_c4(sys: GFunctionSystem, c4: IntervalReal,
                  digits: int) -> tuple[Optional[IntervalReal], bool]:
    """Closed-form cross-check of c4, available for the weight-2 polylog system.

    The chain collapses symbolically for that system (c6 = 2^{17/16} e^{187/3},
    c7 = 96 log(4 e^66)), giving 400593/16 + 1185019/(3 log 2) + 396 log 2.
    A discrepancy beyond 1% raises a flag instead of preferring either value.
    """
    is_li2 = (sys.params.get("s") == 2 and sys.N == 2 and sys.d == 2
              and sys.C == 1 and sys.D_poly.height() == 1
              and sys.Dgrowth_sym == (Fraction(1), Fraction(2)))
    if not is_li2:
        return None, False
    log2 = log2_enclosure(digits + 6)
    ref = (IntervalReal.point(Fraction(400593, 16))
           + Fraction(1185019, 3) / log2 + 396 * log2).round_sig(digits + 2)
    agree = (abs(c4 - ref).hi <= ref.lo / 100)
    return ref, not agree


def check_eqhyp(report: ConstantsReport, sys: GFunctionSystem, a: int, b: int,
                digits: int = DEFAULT_DIGITS, max_digits: int = 2048) -> Optional[bool]:
    """Certified evaluation of the smallness hypothesis:

        2^{2(N+y)+(d-1)y} H^y (CD)^{(x+1)N/y} C^{N+dy} (C|a|/b)^{x+1-y} (bD)^{x+dy} beta < 1/2.

    Returns True (upper endpoint < 1/2), False (lower endpoint >= 1/2), or
    None when the enclosure still straddles 1/2 at the precision cap.
    """
    N, d = sys.N, sys.d
    y = report.y
    if y < Fraction(1, 8 * d):
        raise PreconditionError("eqhyp evaluation requires y >= 1/(8d)")
    if report.x is None or report.beta is None:
        raise PreconditionError("report has no schedule: eqhyp not evaluable")
    H = sys.D_poly.height()
    C = sys.C
    aa = abs(a)
    cd_coef, cd_exp = sys.CD_sym()
    if sys.Dgrowth_sym is not None:
        dg_coef, dg_exp = sys.Dgrowth_sym
    else:
        dg_coef, dg_exp = sys.Dgrowth_rat, Fraction(0)

    dg = digits
    while True:
        g = dg + 10
        x = report.x if dg == digits else None
        if x is None:
            # re-derive x at higher precision
            logb = log_frac(Fraction(b), g)
            log_chia = _log_sym((report.chi_sym[0] * aa, report.chi_sym[1]),
                                report.chi * aa, g)
            x = logb / (3 * log_chia)
        one = IntervalReal.point(1)
        lhs = frac_pow(Fraction(2), 2 * N + (d + 1) * y, g)
        lhs = lhs * frac_pow(H, y, g) if H != 1 else lhs
        # (CD)^{(x+1)N/y}
        log_cd = _log_sym((cd_coef, cd_exp), sys.CD(g), g)
        lhs = lhs * exp_interval((x + one) * Fraction(N) / y * log_cd, g)
        lhs = lhs * frac_pow(C, N + d * y, g) if C != 1 else lhs
        # (C|a|/b)^{x+1-y}, base in (0,1) so the log is negative
        base5 = C * Fraction(aa, b)
        lhs = lhs * exp_interval((x + 1 - y) * log_frac(base5, g), g)
        # (b*D)^{x+dy}
        log_bD = log_frac(b * dg_coef, g) + IntervalReal.point(dg_exp)
        lhs = lhs * exp_interval((x + d * y) * log_bD, g)
        lhs = (lhs * report.beta).round_sig(g)
        half = Fraction(1, 2)
        if lhs.hi < half:
            return True
        if lhs.lo >= half:
            return False
        dg *= 2
        if dg > max_digits:
            return None

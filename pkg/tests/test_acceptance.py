"""Acceptance gate: one test per acceptance criterion, at the stated tolerance.

Criteria 2 through 7 share one approximant grid ({log1m, polylog2}, p in 2..10,
h >= 1, N h <= q <= p); it is built once, lazily, and cached for the module.
The strict digit-block bound (second half of criterion 9) uses the (b-1)
numerator and genuinely fails on carry-boundary blocks; that test is expected
to stay red, and the companion test pins the provable b-numerator bound plus
the exact violation set.
"""
import time
from fractions import Fraction

from gpade import (
    IntervalReal,
    bound_height_Qk,
    bound_remainder,
    build_approximant,
    cf_sqrt,
    compute_constants,
    eval_certified,
    frac_pow,
    iterate,
    log2_enclosure,
    pell_bound_check,
    reduce_to_theorem1,
    value_producer,
    verify_theorem1,
)
from gpade.cli import CHAIN_INSTANCES
from gpade.derivation import zero_estimate_check
from gpade.digits import expand_digits, theorem2_convergent

GRID_P_MAX = 10
Z_POINTS = [Fraction(1, 3), Fraction(-1, 3), Fraction(1, 10),
            Fraction(-1, 10), Fraction(1, 100)]

# (t, n) cells where |xi - p_n/q_n| <= (b-1)/b^{n+tN} fails for Li2(1/10)
STRICT_BOUND_VIOLATIONS = [
    (1, 10), (1, 27), (1, 91), (1, 92), (1, 107), (1, 142), (1, 145),
    (1, 164), (1, 165), (1, 225), (2, 299), (3, 85), (3, 111), (3, 279),
    (3, 282),
]

_GRID_CACHE: dict = {}


def _grid_instances() -> list[tuple[str, int, int, int]]:
    out = []
    for arg, N in (("log1m", 1), ("polylog2", 2)):
        for p in range(2, GRID_P_MAX + 1):
            for h in range(1, p // N + 1):
                for q in range(N * h, p + 1):
                    out.append((arg, p, q, h))
    return out


def _families(log1m, polylog2) -> dict:
    if not _GRID_CACHE:
        systems = {"log1m": log1m, "polylog2": polylog2}
        for arg, p, q, h in _grid_instances():
            system = systems[arg]
            approx = build_approximant(system, p, q, h)
            # iterate() cross-checks the recurrence against the direct
            # formula for Q_k internally and raises if they ever disagree
            fam = iterate(approx, system, max(system.N, h // system.d))
            _GRID_CACHE[(arg, p, q, h)] = (system, approx, fam)
    return _GRID_CACHE


def test_criterion_01_li2_constant_chain(polylog2):
    t0 = time.monotonic()
    rep = compute_constants(polylog2, 1, 10, Fraction(1), 1,
                            allow_desk_scale=True)
    assert rep.c1_sym == (Fraction(4), Fraction(66))
    assert rep.c2 == 12
    assert rep.c4.certainly_lt(frac_pow(Fraction(10), Fraction(289, 50), 48).lo)
    L2 = log2_enclosure(60)
    displayed = (IntervalReal.point(Fraction(1201779, 48))
                 + IntervalReal.point(Fraction(1185019, 3)) / L2
                 + L2 * Fraction(396))
    assert rep.c4.lo <= displayed.hi and displayed.lo <= rep.c4.hi
    assert abs(rep.c4 - displayed).hi <= displayed.lo / 100
    assert rep.c4_discrepancy is False
    assert time.monotonic() - t0 < 10


def test_criterion_02_order_certificates(log1m, polylog2):
    t0 = time.monotonic()
    fams = _families(log1m, polylog2)
    for (arg, p, q, h), (system, approx, _) in fams.items():
        assert min(approx.order_certificates) >= p + h + 1, (arg, p, q, h)
        assert approx.Q.is_integral(), (arg, p, q, h)
        assert approx.denominator_cleared, (arg, p, q, h)
    assert len(fams) == 314
    assert time.monotonic() - t0 < 120


def test_criterion_03_siegel_height_bound(log1m, polylog2):
    exceptions = [key for key, (_, approx, _) in _families(log1m, polylog2).items()
                  if not approx.siegel_ok]
    assert exceptions == []


def test_criterion_04_iteration_certificates(log1m, polylog2):
    for (arg, p, q, h), (system, _, fam) in _families(log1m, polylog2).items():
        for cert in fam.certs:
            if cert.k > h // system.d:
                continue
            key = (arg, p, q, h, cert.k)
            assert cert.Q_integral, key
            assert cert.degree_ok, key
            assert cert.P_cleared, key
            assert cert.order_ok, key


def test_criterion_05_height_bound_domination(log1m, polylog2):
    for (arg, p, q, h), (system, approx, fam) in _families(log1m, polylog2).items():
        for k in range(h // system.d + 1):
            bound = bound_height_Qk(approx, system, k)
            assert fam.Q(k).height() <= bound, (arg, p, q, h, k)


def test_criterion_06_remainder_bound_domination(log1m, polylog2):
    for (arg, p, q, h), (system, _, fam) in _families(log1m, polylog2).items():
        for k in range(h // system.d + 1):
            for z in Z_POINTS:
                if system.C * abs(z) >= 1:
                    continue
                bound = bound_remainder(fam, system, k, z)
                for j in range(1, system.N + 1):
                    F = eval_certified(system, j, z, Fraction(1, 10 ** 48))
                    actual = abs(F * fam.Q(k)(z) - fam.P(j, k)(z))
                    if not actual.hi <= bound:
                        F = eval_certified(system, j, z, Fraction(1, 10 ** 128))
                        actual = abs(F * fam.Q(k)(z) - fam.P(j, k)(z))
                    assert actual.hi <= bound, (arg, p, q, h, k, z, j)


def test_criterion_07_zero_estimate(log1m, polylog2):
    for (arg, p, q, h), (system, _, fam) in _families(log1m, polylog2).items():
        chk = zero_estimate_check(fam, system)
        key = (arg, p, q, h)
        assert chk.nonzero, key
        assert chk.vanish_order >= chk.required_vanish, key
        assert chk.degree_ok, key


def test_criterion_08_xi_chain_instances(log1m, polylog2):
    systems = {"log1m": log1m, "polylog2": polylog2}
    assert len(CHAIN_INSTANCES) == 20
    for arg, a, b, B, m, n, p, q, h in CHAIN_INSTANCES:
        assert p >= q + m, (arg, a, b, m)
        rep = verify_theorem1(systems[arg], a, b, B, m, n, digits=64,
                              property_mode=True, pqh=(p, q, h))
        ch = rep.chain
        key = (arg, a, b, B, m, n)
        assert ch is not None, key
        assert ch.witness.xi != 0, key
        assert ch.witness.xi % b ** m == 0, key
        assert ch.all_certified, key


def test_criterion_09_digit_stability_500(polylog2, li2_digits_600):
    t0 = time.monotonic()
    value = value_producer(polylog2, 2, Fraction(1, 10))
    ds1 = expand_digits(value, 10, 500)
    ds2 = expand_digits(value, 10, 1000)
    assert ds1.digits == ds2.digits[:500]
    assert ds1.as_str(500) == li2_digits_600[:500]
    assert time.monotonic() - t0 < 120


def test_criterion_09_strict_block_bound(polylog2):
    t0 = time.monotonic()
    value = value_producer(polylog2, 2, Fraction(1, 10))
    ds = expand_digits(value, 10, 300 + 12 * 3 + 60)
    violations = []
    for t in (1, 2, 3):
        for n in range(1, 301):
            conv = theorem2_convergent(ds, value, t, n)
            if conv.holds is not True:
                violations.append((t, n))
    assert time.monotonic() - t0 < 120
    # stays red: the (b-1) numerator is not provable and fails on
    # carry-boundary blocks; the provable b-numerator companion is green
    assert violations == [], f"strict (b-1)/b^(n+tN) bound fails at (t, n) = {violations}"


def test_criterion_09_provable_block_bound(polylog2):
    value = value_producer(polylog2, 2, Fraction(1, 10))
    ds = expand_digits(value, 10, 300 + 12 * 3 + 60)
    strict_violations = []
    for t in (1, 2, 3):
        for n in range(1, 301):
            conv = theorem2_convergent(ds, value, t, n)
            assert conv.holds_relaxed is True, (t, n)
            if conv.holds is not True:
                strict_violations.append((t, n))
    assert strict_violations == STRICT_BOUND_VIOLATIONS


def test_criterion_10_pell_and_reduction():
    t0 = time.monotonic()
    for dv in (2, 3, 5, 7):
        d = Fraction(dv)
        convs = [c for c in cf_sqrt(d, 40).convergents if c.beta <= 10 ** 6]
        assert len(convs) >= 10, dv
        for conv in convs:
            assert pell_bound_check(conv, d), (dv, conv.alpha, conv.beta)
            if conv.alpha ** 2 < 2:      # reduction needs a base >= 2
                continue
            red = reduce_to_theorem1(conv, d)
            key = (dv, conv.alpha, conv.beta)
            assert red.identity_series_checked, key
            assert red.identity_width < Fraction(1, 10 ** 8), key
    assert time.monotonic() - t0 < 60

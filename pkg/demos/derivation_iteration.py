"""Run the derivation iteration and the determinant zero estimate.

For the log(1-z) system with Q = 2 - z the first iterate is computable by
hand: Q_1 = D Q' = z - 1 (up to the recurrence's sign bookkeeping) and the
2x2 determinant of the first two columns is exactly z^2, so the estimate's
divisibility and degree budget are visible at a glance.
"""
from gpade import build_approximant, iterate, resolve_system
from gpade.derivation import zero_estimate_check


def main() -> None:
    log1m = resolve_system("log1m")
    base = build_approximant(log1m, 1, 1, 1)
    fam = iterate(base, log1m, K=1)
    for cert in fam.certs:
        k = cert.k
        print(f"k={k}: Q_{k} = {fam.Q(k)},  P_{k} = {fam.P(1, k)}")
        print(f"      degree ok {cert.degree_ok}, Q integral {cert.Q_integral}, "
              f"P cleared {cert.P_cleared}")
        print(f"      order verified {cert.order_verified} >= target {cert.order_targets}")
    chk = zero_estimate_check(fam, log1m)
    print(f"Delta           = {chk.Delta}")
    print(f"vanish order    = {chk.vanish_order} (required {chk.required_vanish})")
    print(f"reduced Delta   = {chk.DeltaTilde}, degree budget ell0 = {chk.ell0}")
    print(f"nonzero {chk.nonzero}, degree ok {chk.degree_ok}")
    print()

    # a two-function system: the iteration couples Li_1 and Li_2 through D A
    li2 = resolve_system("polylog2")
    base = build_approximant(li2, 6, 4, 2)
    fam = iterate(base, li2, K=2)
    print("polylog2 (p=6, q=4, h=2), k = 0..2:")
    for cert in fam.certs:
        print(f"  k={cert.k}: orders {cert.order_verified} >= {cert.order_targets}, "
              f"all checks {cert.degree_ok and cert.Q_integral and cert.P_cleared and cert.order_ok}")
    chk = zero_estimate_check(fam, li2)
    print(f"  zero estimate: vanish {chk.vanish_order} >= {chk.required_vanish}, "
          f"deg(reduced) = {chk.DeltaTilde.degree()} <= {chk.ell0}")


if __name__ == "__main__":
    main()

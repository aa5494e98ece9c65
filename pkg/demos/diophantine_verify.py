"""Certify a distance lower bound |n - B b^m F(a/b)| through the xi chain.

F here is log(9/10): the nearest integer to 10 log(9/10) is n = -1, the
witness xi is a nonzero integer divisible by b^m = 10, and replaying the
remainder/balance/distance inequalities certifies an explicit rational
lower bound on the distance, which the enclosure of the true value confirms.
"""
from gpade import replay_chain, resolve_system, scan_nearest, verify_theorem1


def main() -> None:
    log1m = resolve_system("log1m")
    a, b, B, m = 1, 10, 1, 1
    n = scan_nearest(log1m, a, b, B, m)
    print(f"nearest integer to {B} * {b}^{m} * log(1 - {a}/{b}): n = {n}")

    chain = replay_chain(log1m, a, b, B, m, n, j=1, pqh=(3, 2, 2))
    w = chain.witness
    print(f"xi = {w.xi}  (k = {w.k}, U = {w.U_jk}, V = {w.V_k})")
    print(f"xi % b^m == 0: {w.divisible_by_bm}")
    print(f"remainder small: {chain.eq_remainder_small}, "
          f"balance: {chain.eq_balance}, distance: {chain.eq_distance}")
    print(f"certified distance lower bound: {float(chain.distance_lower):.3e}")
    print()

    # the theorem-shaped report: rhs = 1/(B b^m (|a|+1)^c4) is astronomically
    # small at desk scale, so the bound holds but certifies little
    rep = verify_theorem1(log1m, a, b, B, m, n)
    print(f"lhs enclosure {rep.lhs.decimal_str(8)}")
    print(f"rhs exponent  {rep.rhs_exponent} (rhs ~ 10^-{rep.rhs_exponent})")
    print(f"status {rep.status}; hypothesis satisfied at this b: {rep.hypothesis_ok}")


if __name__ == "__main__":
    main()

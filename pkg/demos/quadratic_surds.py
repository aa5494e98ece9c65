"""Continued fractions of square roots and the reduction to the main theorem.

Convergents alpha/beta of sqrt(d) have Pell values alpha^2 - d beta^2 of
absolute value at most 2 sqrt(d) + 1 (certified interval comparison).  Each
convergent reduces the approximation question for sqrt(d) to the square-root
binomial system at a = alpha^2 - d beta^2, b = alpha^2, and the restricted
scan reports, for each exponent m, how close b^m sqrt(d) gets to an integer.
"""
from fractions import Fraction

from gpade import cf_sqrt, pell_bound_check, reduce_to_theorem1, theorem5_scan


def main() -> None:
    d = Fraction(2)
    exp = cf_sqrt(d, 8)
    print(f"sqrt(2) = [{exp.terms[0]}; {', '.join(str(t) for t in exp.terms[1:])} ...]"
          f"  (period {exp.period})")
    for conv in exp.convergents[:6]:
        pell = conv.alpha ** 2 - 2 * conv.beta ** 2
        print(f"  {conv.alpha}/{conv.beta}: Pell value {pell:+d}, "
              f"|Pell| <= 2 sqrt(2)+1: {pell_bound_check(conv, d)}")
    print()

    conv = exp.convergents[3]
    red = reduce_to_theorem1(conv, d)
    print(f"reduction of {conv.alpha}/{conv.beta}: a = {red.a}, b = {red.b}, "
          f"target system {red.system_name}")
    print(f"  f-identity enclosure width {float(red.identity_width):.1e}, "
          f"series cross-check {red.identity_series_checked}")
    print()

    scan = theorem5_scan(d, conv, (1, 4))
    print(f"restricted approximation by n/{scan.den}^m:")
    for row in scan.rows:
        print(f"  m={row.m}: nearest n = {row.n}, "
              f"distance {row.distance.decimal_str(8)}")
    print(f"  eta fitting every sampled m: {scan.eta_fit}")


if __name__ == "__main__":
    main()

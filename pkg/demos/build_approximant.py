"""Build type-II approximants and inspect their certificates.

The first instance is small enough to check by hand: for the system whose
function is log(1-z), the (p, q, h) = (1, 1, 1) approximant is
Q = 2 - z, P = -2z, and Q log(1-z) - P vanishes to order 3 at the origin.
"""
from gpade import build_approximant, resolve_system


def show(arg: str, p: int, q: int, h: int) -> None:
    system = resolve_system(arg)
    approx = build_approximant(system, p, q, h)
    print(f"{arg} (p={p}, q={q}, h={h})")
    print(f"  kernel vector   {approx.kernel_vector}")
    print(f"  Q               {approx.Q}")
    for j in range(1, system.N + 1):
        print(f"  P[{j}]            {approx.P[j - 1]}")
    print(f"  order target    {p + h + 1}")
    print(f"  order certified {approx.order_certificates}")
    print(f"  Q integral      {approx.Q.is_integral()}")
    print(f"  P cleared       {approx.denominator_cleared}")
    print(f"  height(Q)       {approx.height_Q}")
    print(f"  Siegel bound ok {approx.siegel_ok}"
          f"  (height <= {approx.siegel_bound.decimal_str(6)})")
    print()


if __name__ == "__main__":
    show("log1m", 1, 1, 1)
    # non-diagonal: p > q buys a factor b^{p-q} in the distance chain later
    show("log1m", 5, 3, 3)
    show("polylog2", 5, 4, 2)

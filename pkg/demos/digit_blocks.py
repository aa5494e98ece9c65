"""Certified digits of Li2(1/10) and the digit-block repetition bounds.

Every printed digit is certified: the enclosure of the value pins the digit
before it is emitted.  The repetition profile counts how often the length-t
block starting at position n repeats immediately; each repetition makes the
block convergent p_n/q_n one block better, and the provable bound
|value - p_n/q_n| <= b/b^(n+tN) holds at every position.  The strict (b-1)
numerator fails for the first time at (t=1, n=10), a carry-boundary block.
"""
from fractions import Fraction

from gpade import resolve_system, value_producer
from gpade.digits import expand_digits, repetition_profile, theorem2_convergent


def main() -> None:
    li2 = resolve_system("polylog2")
    value = value_producer(li2, 2, Fraction(1, 10))
    ds = expand_digits(value, 10, 120)
    print("Li2(1/10) =", "0." + ds.as_str(60))
    print("            ", " " + ds.as_str(120)[60:])
    print()

    prof = repetition_profile(ds, t=1, window=(20, 60))
    print(f"repeats of the 1-digit block, positions 20..60: "
          f"max count/n = {prof.max_ratio}")
    for n, count in prof.values:
        if count > 1:
            print(f"  n={n}: block repeats {count} times "
                  f"(digits ...{ds.as_str(n + count + 1)[n - 2:]}...)")
    print()

    for t, n in ((1, 9), (1, 10)):
        conv = theorem2_convergent(ds, value, t, n)
        print(f"t={t}, n={n}: p_n/q_n = {conv.p_n}/{conv.q_n}, "
              f"repetitions = {conv.count}")
        print(f"  strict (b-1) numerator holds:   {conv.holds}")
        print(f"  provable b numerator holds:     {conv.holds_relaxed}")


if __name__ == "__main__":
    main()

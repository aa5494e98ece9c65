import os
import sys
from fractions import Fraction

import pytest

# acceptance reports print exact integers of arbitrary size
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)

ORACLE_DIR = os.path.join(os.path.dirname(__file__), "oracles")


@pytest.fixture(scope="session")
def li2_digits_600() -> str:
    """Frozen 600 decimal digits of the dilogarithm at 1/10 (two independent methods)."""
    with open(os.path.join(ORACLE_DIR, "li2_digits.txt")) as fh:
        return fh.read().strip()


@pytest.fixture(scope="session")
def log1m():
    from gpade import resolve_system
    return resolve_system("log1m")


@pytest.fixture(scope="session")
def polylog2():
    from gpade import resolve_system
    return resolve_system("polylog2")


@pytest.fixture(scope="session")
def binom_half():
    from gpade import resolve_system
    return resolve_system("binom:1/2")


def mp_interval_contains(iv, mp_value, slack=None) -> bool:
    """True when an mpmath value (converted outward) lies inside the enclosure."""
    import mpmath
    lo = Fraction(mpmath.nstr(mp_value, 40, strip_zeros=False))
    return iv.lo <= lo <= iv.hi or (slack is not None and
                                    iv.lo - slack <= lo <= iv.hi + slack)

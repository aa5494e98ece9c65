"""Matrices of rational functions p(z)/q(z) with a common-denominator clearing op."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import PreconditionError
from .polynomial import Poly, poly_divmod, poly_gcd

Entry = Union[Poly, int, Fraction, tuple]


def _as_pair(e: Entry) -> tuple[Poly, Poly]:
    if isinstance(e, tuple):
        num, den = e
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
    else:
        num = e if isinstance(e, Poly) else Poly.constant(e)
        den = Poly.constant(1)
    if den.is_zero:
        raise PreconditionError("rational function with zero denominator")
    g = poly_gcd(num, den)
    if not g.is_zero and g.degree() > 0:
        num, _ = poly_divmod(num, g)
        den, _ = poly_divmod(den, g)
    return num, den


class RatFunMatrix:
    """Rectangular matrix of reduced rational functions."""

    def __init__(self, entries: Sequence[Sequence[Entry]]):
        self.entries = [[_as_pair(e) for e in row] for row in entries]
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.nrows else 0
        if any(len(row) != self.ncols for row in self.entries):
            raise PreconditionError("ragged matrix")

    def entry(self, i: int, j: int) -> tuple[Poly, Poly]:
        return self.entries[i][j]

    def row_is_zero(self, i: int) -> bool:
        return all(num.is_zero for num, _ in self.entries[i])

    def cleared(self, multiplier: Poly) -> list[list[Poly]]:
        """Entrywise multiplier * entry, which must come out polynomial.

        Used with the common denominator: every entry's denominator must
        divide `multiplier`.
        """
        out = []
        for row in self.entries:
            orow = []
            for num, den in row:
                q, r = poly_divmod(multiplier, den)
                if not r.is_zero:
                    raise PreconditionError(
                        "denominator does not divide the clearing polynomial")
                orow.append(q * num)
            out.append(orow)
        return out

"""Integer kernel bases and LLL size reduction, all in exact arithmetic.

The kernel routine row-reduces the transpose with unimodular row operations
(Euclidean gcd pivoting), so the returned basis spans the full integer kernel
lattice {v in Z^c : M v = 0}, not just a finite-index sublattice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import PreconditionError


def integer_kernel_basis(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[list[int]]:
    """Basis of the integer kernel of `matrix` (rows x ncols).

    `ncols` is required when the matrix has no rows (kernel = Z^ncols).
    """
    rows = [list(map(int, r)) for r in matrix]
    if rows:
        c = len(rows[0])
        if any(len(r) != c for r in rows):
            raise PreconditionError("ragged matrix")
        if ncols is not None and ncols != c:
            raise PreconditionError("ncols disagrees with matrix width")
    else:
        if ncols is None:
            raise PreconditionError("ncols required for an empty matrix")
        c = ncols
    r = len(rows)

    # Work on A = transpose(matrix) (c rows, r cols) with U tracking row ops:
    # U * A = H.  Rows of U whose H-row is zero form a kernel basis.
    A = [[rows[i][j] for i in range(r)] for j in range(c)]
    U = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    pivot_row = 0
    for col in range(r):
        # gcd-eliminate column `col` below pivot_row
        while True:
            best = None
            for i in range(pivot_row, c):
                if A[i][col] != 0 and (best is None or abs(A[i][col]) < abs(A[best][col])):
                    best = i
            if best is None:
                break
            # reduce every other row in this column modulo the smallest entry
            done = True
            for i in range(pivot_row, c):
                if i == best or A[i][col] == 0:
                    continue
                qfac = A[i][col] // A[best][col]
                if qfac:
                    for k in range(r):
                        A[i][k] -= qfac * A[best][k]
                    for k in range(c):
                        U[i][k] -= qfac * U[best][k]
                if A[i][col] != 0:
                    done = False
            if done:
                A[pivot_row], A[best] = A[best], A[pivot_row]
                U[pivot_row], U[best] = U[best], U[pivot_row]
                pivot_row += 1
                break
    kernel = [U[i] for i in range(c) if all(x == 0 for x in A[i])]
    return kernel


def _gso(basis: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[list[Fraction]], list[Fraction]]:
    n = len(basis)
    ortho: list[list[Fraction]] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms: list[Fraction] = []
    for i in range(n):
        v = list(basis[i])
        for j in range(len(ortho)):
            if norms[j] == 0:
                mu[i][j] = Fraction(0)
                continue
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(basis[i], ortho[j])) / norms[j]
            v = [a - mu[i][j] * b for a, b in zip(v, ortho[j])]
        ortho.append(v)
        norms.append(sum(x * x for x in v))
    return ortho, mu, norms


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)) -> list[list[int]]:
    """LLL-reduce a list of linearly independent integer vectors (exact rationals)."""
    b = [list(map(int, v)) for v in basis]
    n = len(b)
    if n <= 1:
        return b
    if not Fraction(1, 4) < delta < 1:
        raise PreconditionError("delta must be in (1/4, 1)")

    _, mu, norms = _gso([list(map(Fraction, v)) for v in b])

    def recompute():
        nonlocal mu, norms
        _, mu, norms = _gso([list(map(Fraction, v)) for v in b])

    k = 1
    while k < n:
        # size-reduce b_k against earlier vectors
        for j in range(k - 1, -1, -1):
            q = mu[k][j]
            r = q.numerator // q.denominator
            if 2 * (q - r) > 1:
                r += 1
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                recompute()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            recompute()
            k = max(k - 1, 1)
    return b


def _sign_normalized(v: Sequence[int]) -> list[int]:
    for x in v:
        if x != 0:
            return list(v) if x > 0 else [-x for x in v]
    return list(v)


def shortest_kernel_vector(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[int]:
    """A deterministic small nonzero kernel vector (max-norm minimized over the
    LLL-reduced basis).

    Tie-break among equal max-norm candidates: earliest-supported first
    nonzero entry, then lexicographically smallest absolute-value tuple;
    sign-normalized so the first nonzero entry is positive.
    """
    basis = integer_kernel_basis(matrix, ncols)
    if not basis:
        raise PreconditionError("kernel is trivial; no nonzero vector exists")
    reduced = lll_reduce(basis)
    candidates = [_sign_normalized(v) for v in reduced if any(v)]

    def first_support(v):
        return next(i for i, x in enumerate(v) if x)

    def key(v):
        return (max(abs(x) for x in v), first_support(v), [abs(x) for x in v], v)

    return min(candidates, key=key)

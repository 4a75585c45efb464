"""Exact rational linear algebra on lists of :class:`Fraction` rows.

Thin adapter over sympy's ``DomainMatrix`` (QQ domain); every function takes
and returns plain Python lists of Fractions so callers never see sympy types.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = list[Fraction]
Rows = Sequence[Sequence[Fraction]]


def _dm(rows: Rows, ncols: int) -> DomainMatrix:
    data = [[QQ.convert(Fraction(x)) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _rows(dm: DomainMatrix) -> list[Vector]:
    return [[_frac(x) for x in row] for row in dm.to_list()]


def rref(rows: Rows, ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    """Reduced row-echelon form with zero rows dropped, and the pivot columns."""
    if not rows:
        return [], ()
    red, pivots = _dm(rows, ncols).rref()
    return _rows(red)[:len(pivots)], tuple(pivots)


def rank(rows: Rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Rows, ncols: int) -> list[Vector]:
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = _dm(rows, ncols).nullspace()
    return [v for v in _rows(ns) if any(v)]


def span_basis(vectors: Rows, ncols: int) -> list[Vector]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    return rref(vectors, ncols)[0]


def same_span(u: Rows, v: Rows, ncols: int) -> bool:
    return span_basis(u, ncols) == span_basis(v, ncols)


def in_span(x: Sequence[Fraction], basis: Rows, ncols: int) -> bool:
    return rank(list(basis) + [list(x)], ncols) == rank(basis, ncols)


def solve_combination(x: Sequence[Fraction], basis: Rows) -> Optional[Vector]:
    """Coefficients ``c`` with ``sum c_i basis_i == x``, or None if x is outside the span."""
    n = len(x)
    k = len(basis)
    if k == 0:
        return [] if not any(x) else None
    # columns are basis vectors; augmented column is x
    aug = [[basis[i][r] for i in range(k)] + [x[r]] for r in range(n)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coeffs[p] = row[k]
    return coeffs


def matmul(a: Rows, b: Rows) -> list[Vector]:
    return [[sum((a[i][t] * b[t][j] for t in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
            for i in range(len(a))]


def identity(n: int) -> list[Vector]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def trace(a: Rows) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))

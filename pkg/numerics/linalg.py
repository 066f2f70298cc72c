"""
Determinants by Gaussian elimination with partial pivoting

The elimination is written out rather than delegated to mp.det. A vanishing
pivot yields an exact zero instead of an exception, and pivots can be
searched along rows or columns so two orderings cross-check one value.
"""

from typing import List

from mpmath import mp, mpc, mpf

from .precision import rounding_unit
from .types import DeterminantReport, Pivoting, SquareMatrix


def _eliminate(rows: List[List[mpc]]) -> mpc:
    n = len(rows)
    det = mpc(1)
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(rows[i][k]))
        if rows[pivot_row][k] == 0:
            return mpc(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        pivot = rows[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            if factor == 0:
                continue
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n):
                row_i[j] -= factor * row_k[j]
    return det


def determinant(m: SquareMatrix, pivoting: Pivoting = Pivoting.ROWS) -> mpc:
    """Determinant at full working precision.

    ``Pivoting.COLUMNS`` eliminates the transpose, which searches pivots along
    rows instead of columns; the two orderings give independent evaluations of
    the same value.
    """
    source = m.transpose() if pivoting is Pivoting.COLUMNS else m
    return _eliminate([list(row) for row in source.entries])


def rounding_bound(m: SquareMatrix) -> mpf:
    """D * 2^(-prec+8) * (max |entry|)^D"""
    return m.dimension * rounding_unit(8) * m.max_abs_entry() ** m.dimension


def determinant_report(m: SquareMatrix, pivoting: Pivoting = Pivoting.ROWS) -> DeterminantReport:
    """Determinant plus the precision-limited flag callers use to escalate precision"""
    value = determinant(m, pivoting)
    bound = rounding_bound(m)
    return DeterminantReport(value=value, rounding_bound=bound, precision_limited=abs(value) < bound)


def hadamard_ratio(m: SquareMatrix) -> mpf:
    """|det| divided by the product of row 2-norms; scale free, within [0, 1]"""
    norms = mpf(1)
    for row in m.entries:
        norm = mp.sqrt(sum(abs(x) ** 2 for x in row))
        if norm == 0:
            return mpf(0)
        norms *= norm
    return abs(determinant(m)) / norms

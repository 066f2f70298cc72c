"""
Hankel matrices built from Riccati coefficients
"""

from typing import Optional, Sequence

from mpmath import mpc

from spectral_errors import InsufficientCoefficientsError
from numerics.linalg import determinant
from numerics.types import SquareMatrix
from .types import Parity, RiccatiCoefficients


def coefficient_index(i: int, j: int, d: int, parity: Parity) -> int:
    """Index of the (i, j) entry, i and j counted from 1"""
    if parity is Parity.PLAIN:
        return i + j + d + 1
    base = 2 * (i + j + d - 1)
    return base if parity is Parity.EVEN else base + 1


def hankel_matrix(
    rc: RiccatiCoefficients,
    D: int,
    d: int,
    parity: Parity,
    weights: Optional[Sequence[mpc]] = None,
) -> SquareMatrix:
    """D×D matrix of f_index(i, j); ``weights`` multiplies f_k elementwise when given"""
    required = coefficient_index(D, D, d, parity)
    if required > rc.K:
        raise InsufficientCoefficientsError(
            f"{parity.value} Hankel determinant with D={D}, d={d} needs f_{required}, only f_{rc.K} available",
            required,
            rc.K,
        )
    coeffs = rc.coeffs if weights is None else [c * w for c, w in zip(rc.coeffs, weights)]
    return SquareMatrix.from_rows(
        [[coeffs[coefficient_index(i, j, d, parity)] for j in range(1, D + 1)] for i in range(1, D + 1)]
    )


def hankel_det(
    rc: RiccatiCoefficients,
    D: int,
    d: int,
    parity: Parity,
    weights: Optional[Sequence[mpc]] = None,
) -> mpc:
    return determinant(hankel_matrix(rc, D, d, parity, weights))

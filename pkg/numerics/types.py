"""
Shared types for the multiprecision substrate

Real and complex numbers are mpmath ``mpf``/``mpc`` values; their precision is
the working precision of the mpmath context they are created and combined in
(see ``numerics.precision``).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Tuple, Union

from mpmath import mp, mpc, mpf

BigReal = mpf
BigComplex = mpc
Number = Union[int, float, str, mpf, mpc, complex]

DEFAULT_PRECISION = 256
MIN_PRECISION = 64


def to_complex(value: Number) -> mpc:
    """Convert any supported scalar to an mpc at the current precision"""
    if isinstance(value, mpc):
        return value
    if isinstance(value, complex):
        return mpc(value.real, value.imag)
    return mpc(mp.mpmathify(value))


class Pivoting(Enum):
    ROWS = "rows"
    COLUMNS = "columns"


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series sum_j coeffs[j] (x - center)^j known through ``order``"""
    center: mpc
    coeffs: Tuple[mpc, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "center", to_complex(self.center))
        object.__setattr__(self, "coeffs", tuple(to_complex(c) for c in self.coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Number], center: Number = 0) -> "TruncatedSeries":
        return cls(center=to_complex(center), coeffs=tuple(coeffs))

    @classmethod
    def constant(cls, value: Number, order: int, center: Number = 0) -> "TruncatedSeries":
        return cls(center=to_complex(center), coeffs=(value,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> mpc:
        if j < 0 or j > self.order:
            raise IndexError(f"coefficient {j} is beyond the declared order {self.order}")
        return self.coeffs[j]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.center, self.coeffs[:order + 1])

    def evaluate(self, x: Number) -> mpc:
        t = to_complex(x) - self.center
        total = mpc(0)
        for c in reversed(self.coeffs):
            total = total * t + c
        return total

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        from .series import series_add
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        from .series import series_add, series_scale
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        from .series import series_mul
        return series_mul(self, other)


@dataclass(frozen=True)
class SquareMatrix:
    """Dense D x D complex matrix stored row-major"""
    entries: Tuple[Tuple[mpc, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(to_complex(x) for x in row) for row in self.entries)
        if len(rows) < 1:
            raise ValueError("matrix dimension must be at least 1")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "SquareMatrix":
        return cls(entries=tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, dimension: int) -> "SquareMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(dimension)] for i in range(dimension)])

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(tuple(zip(*self.entries)))

    def permute_rows(self, permutation: Sequence[int]) -> "SquareMatrix":
        return SquareMatrix(tuple(self.entries[i] for i in permutation))

    def max_abs_entry(self) -> mpf:
        return max(abs(x) for row in self.entries for x in row)


@dataclass(frozen=True)
class DeterminantReport:
    value: mpc
    rounding_bound: mpf
    precision_limited: bool


@dataclass(frozen=True)
class NewtonResult:
    root: Tuple[mpc, ...]
    residual_norm: mpf
    iterations: int

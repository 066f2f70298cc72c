"""
Working-precision helpers around the mpmath context
"""

import os
from contextlib import contextmanager
from typing import Iterator, Optional

from dotenv import load_dotenv
from mpmath import mp, mpf

from logging_config import get_logger
from spectral_errors import InvalidInputError
from .types import DEFAULT_PRECISION, MIN_PRECISION

load_dotenv()

logger = get_logger("numerics.precision")


def default_precision() -> int:
    """Default working precision in bits (SPECTRA_PRECISION, else 256)"""
    raw = os.getenv("SPECTRA_PRECISION")
    if not raw:
        return DEFAULT_PRECISION
    try:
        bits = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer SPECTRA_PRECISION={raw!r}")
        return DEFAULT_PRECISION
    return max(bits, MIN_PRECISION)


def validate_precision(bits: int) -> int:
    if bits < MIN_PRECISION:
        raise InvalidInputError(f"precision must be at least {MIN_PRECISION} bits, got {bits}",
                                {"precision": bits})
    return bits


@contextmanager
def working_precision(bits: Optional[int] = None) -> Iterator[int]:
    """Run the enclosed block at ``bits`` of binary precision"""
    bits = validate_precision(bits if bits is not None else default_precision())
    with mp.workprec(bits):
        yield bits


def rounding_unit(shift: int = 0) -> mpf:
    """2^(-prec + shift) at the current working precision"""
    return mpf(2) ** (shift - mp.prec)


def half_precision_tolerance() -> mpf:
    """2^(-prec/2), the admissibility and differencing scale"""
    return mpf(2) ** (-(mp.prec // 2))


def bits_for_digits(digits: int) -> int:
    # log2(10) rounded up keeps the requested decimal digits
    return int(digits * 3.3219280948873626) + 1

"""
Samples of the potential along a downward-shifted line
"""

from dataclasses import dataclass
from typing import List

from mpmath import mp, mpc, mpf

from spectral_errors import InvalidInputError
from numerics.types import Number
from .families import eval_potential
from .types import Potential, ShiftedLine


@dataclass(frozen=True)
class ProfileRow:
    s: mpf
    value: mpc


def vertical_shift(p: Potential, line: ShiftedLine) -> mpf:
    """−Re U(0): lifts the bottom of the well to zero (4R²/3 for the sextic at ε = R)"""
    return -eval_potential(p, line.point(0)).real


def shifted_profile(
    p: Potential,
    line: ShiftedLine,
    s_min: Number,
    s_max: Number,
    samples: int,
    shift: bool = False,
) -> List[ProfileRow]:
    """U(s) = V(s − iε) on a uniform grid of ``samples`` points"""
    if samples < 2:
        raise InvalidInputError(f"a profile needs at least 2 samples, got {samples}", {"samples": samples})
    s_min, s_max = mp.mpf(s_min), mp.mpf(s_max)
    if s_max <= s_min:
        raise InvalidInputError("s_max must exceed s_min", {"s_min": str(s_min), "s_max": str(s_max)})
    offset = vertical_shift(p, line) if shift else mpf(0)
    step = (s_max - s_min) / (samples - 1)
    rows = []
    for k in range(samples):
        s = s_min + k * step
        rows.append(ProfileRow(s=s, value=eval_potential(p, line.point(s)) + offset))
    return rows

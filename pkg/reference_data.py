"""
Bundled reference eigenvalues for the four integer-exponent models
"""

import json
import os
from dataclasses import dataclass
from decimal import Decimal
from functools import lru_cache
from typing import List, Optional, Tuple

from mpmath import mp, mpf

from logging_config import get_logger
from perturb import EnergyEstimate

logger = get_logger("reference_data")

DATA_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "table1.json")

MODELS: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 3), (3, 1), (3, 3))


@dataclass(frozen=True)
class ReferenceEntry:
    m: int
    n: int
    R: str
    E: str

    @property
    def sort_key(self) -> Tuple[int, int, Decimal]:
        return (self.m, self.n, Decimal(self.R))

    @property
    def error_bar(self) -> Decimal:
        """Half a unit in the last quoted digit"""
        exponent = Decimal(self.E).as_tuple().exponent
        return Decimal(5).scaleb(exponent - 1)

    def estimate(self) -> EnergyEstimate:
        return EnergyEstimate(value=mp.mpc(mp.mpf(self.E)), order="reference",
                              error_bar=mp.mpf(str(self.error_bar)))


@lru_cache(maxsize=1)
def load_table1(path: str = DATA_FILE) -> Tuple[ReferenceEntry, ...]:
    with open(path, "r") as f:
        payload = json.load(f)
    entries = tuple(sorted((ReferenceEntry(m=e["m"], n=e["n"], R=e["R"], E=e["E"]) for e in payload["entries"]),
                           key=lambda e: e.sort_key))
    logger.debug(f"Loaded {len(entries)} reference eigenvalues from {path}")
    return entries


def lookup(m: int, n: int, R: str) -> Optional[ReferenceEntry]:
    for entry in load_table1():
        if entry.m == m and entry.n == n and Decimal(entry.R) == Decimal(R):
            return entry
    return None


def entries_for(m: int, n: int) -> List[ReferenceEntry]:
    return [e for e in load_table1() if e.m == m and e.n == n]


def exact_ground_level(R) -> mpf:
    """2 − √(4R⁴+1), the closed-form ground level of x² + R⁴/x²"""
    R = mp.mpf(R)
    return 2 - mp.sqrt(4 * R ** 4 + 1)

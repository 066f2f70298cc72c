"""
Run configuration for the command-line front end

Precedence, lowest first: field defaults, environment (SPECTRA_PRECISION,
SPECTRA_FORMAT, SPECTRA_JOBS), a dotenv-style config file, command-line flags.
Config files hold one ``key=value`` per line using the field names below
(``format`` is accepted for ``output_format``), e.g.::

    family=int
    m=1
    n=3
    R=2
    precision=512
"""

import os
from decimal import Decimal, InvalidOperation
from typing import Any, Dict, Literal, Optional

from dotenv import dotenv_values, load_dotenv
from pydantic import BaseModel, Field, field_validator, model_validator

from logging_config import get_logger
from numerics.types import DEFAULT_PRECISION, MIN_PRECISION
from numerics.precision import working_precision
from potentials import AlphaBeta, IntegerFamily, Potential, ShiftedLine, ShiftedSextic

load_dotenv()

logger = get_logger("run_config")

ENVIRONMENT_KEYS = {
    "SPECTRA_PRECISION": "precision",
    "SPECTRA_FORMAT": "output_format",
    "SPECTRA_JOBS": "jobs",
}

ALIASES = {"format": "output_format"}


def _decimal(value: str, name: str) -> str:
    try:
        Decimal(value)
    except InvalidOperation:
        raise ValueError(f"{name} must be a decimal number, got {value!r}")
    return value


class RunConfig(BaseModel):
    family: Literal["int", "ab", "sextic"] = Field(default="int", description="Potential family.")
    m: int = Field(default=1, description="Confining exponent x^(2m); odd.")
    n: int = Field(default=1, description="Spike exponent λ/x^(2n); odd.")
    R: str = Field(default="2", description="Integer-family coupling.")
    alpha: str = Field(default="0", description="α of −(ix)^(2+α) − g²/(ix)^(6+β).")
    beta: str = Field(default="0", description="β of the same family.")
    g: str = Field(default="1", description="Spike strength for the ab and sextic families.")

    precision: int = Field(default=DEFAULT_PRECISION, ge=MIN_PRECISION, description="Working precision in bits.")
    output_format: Literal["table", "csv", "json"] = Field(default="table")
    out: Optional[str] = Field(default=None, description="Output file (or directory for fig2).")
    jobs: int = Field(default=1, ge=1, description="Worker processes for batch commands.")
    timing: bool = Field(default=False, description="Record wall-clock runtimes in table1 reports.")

    v: int = Field(default=0, ge=0, le=10, description="Oscillator level.")
    N: int = Field(default=20, ge=0, description="Perturbative order.")
    J: int = Field(default=10, ge=1, description="Taylor coefficients beyond V2 for the taylor command.")
    D_min: int = Field(default=2, ge=1)
    D_max: int = Field(default=8, ge=2)
    d: int = Field(default=0, ge=0)
    digits: int = Field(default=20, ge=1, le=60, description="Ladder stopping target in significant digits.")
    branch: Literal["+", "-"] = Field(default="-", description="σ branch of the regularized variant.")

    N_max: int = Field(default=40, ge=2, description="Highest order on fig2 curves.")

    epsilon: Optional[str] = Field(default=None, description="Line shift ε; defaults to the distance of the admissible minimum.")
    s_min: str = Field(default="-10")
    s_max: str = Field(default="10")
    samples: int = Field(default=201, ge=2)
    shift: bool = Field(default=False, description="Lift the profile so that Re U(0) = 0.")

    @field_validator("R", "alpha", "beta", "g", "s_min", "s_max")
    @classmethod
    def check_decimal(cls, value: str, info) -> str:
        return _decimal(value, info.field_name)

    @field_validator("epsilon")
    @classmethod
    def check_epsilon(cls, value: Optional[str]) -> Optional[str]:
        return None if value is None else _decimal(value, "epsilon")

    @model_validator(mode="after")
    def check_model(self) -> "RunConfig":
        if self.D_max <= self.D_min:
            raise ValueError(f"D_max must exceed D_min, got {self.D_min}..{self.D_max}")
        # family constructors raise InvalidInputError, a ValueError
        self.build_potential()
        return self

    def build_potential(self) -> Potential:
        with working_precision(self.precision):
            if self.family == "int":
                return IntegerFamily(self.m, self.n, self.R)
            if self.family == "ab":
                return AlphaBeta(self.alpha, self.beta, self.g)
            return ShiftedSextic(self.g)

    def build_line(self) -> ShiftedLine:
        with working_precision(self.precision):
            if self.epsilon is not None:
                return ShiftedLine(self.epsilon)
            if self.family == "sextic":
                return ShiftedLine(self.build_potential().R)
            if self.family == "ab":
                return ShiftedLine(self.build_potential().T)
            return ShiftedLine(self.R)


def _environment() -> Dict[str, Any]:
    values = {}
    for key, field_name in ENVIRONMENT_KEYS.items():
        raw = os.getenv(key)
        if raw:
            values[field_name] = raw
    return values


def _config_file(path: str) -> Dict[str, Any]:
    if not os.path.exists(path):
        raise FileNotFoundError(f"Config file not found: {path}")
    values = {}
    for key, value in dotenv_values(path).items():
        if value is None:
            continue
        name = ALIASES.get(key.lower(), key)
        if name not in RunConfig.model_fields:
            name = name.lower()
        if name not in RunConfig.model_fields:
            logger.warning(f"Ignoring unknown config key {key!r} in {path}")
            continue
        values[name] = value
    return values


def load_run_config(flags: Optional[Dict[str, Any]] = None, config_path: Optional[str] = None) -> RunConfig:
    """Merge defaults, environment, config file and flags; flags set to None are ignored"""
    merged: Dict[str, Any] = {}
    merged.update(_environment())
    if config_path:
        merged.update(_config_file(config_path))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    logger.debug(f"Resolved run configuration keys: {sorted(merged)}")
    return RunConfig(**merged)

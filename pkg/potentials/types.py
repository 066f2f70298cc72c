"""
Potential families and the geometric objects attached to them

Every potential is a short sum of power-law terms c·(k·x)^p with k = 1 or i,
which is all that evaluation and Taylor expansion need to know about it.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar, Dict, Tuple, Union

from mpmath import mp, mpc, mpf

from spectral_errors import InvalidInputError, SingularityError
from numerics.types import Number, to_complex


class FamilyKind(Enum):
    INTEGER = "int"
    ALPHA_BETA = "ab"
    SEXTIC = "sextic"


@dataclass(frozen=True)
class PowerTerm:
    """coefficient · (rotation · x) ** exponent"""
    coefficient: mpc
    rotation: mpc
    exponent: Union[int, mpf]

    def __post_init__(self):
        exponent = mp.mpf(self.exponent)
        if exponent == mp.nint(exponent):
            exponent = int(exponent)
        object.__setattr__(self, "exponent", exponent)
        object.__setattr__(self, "coefficient", to_complex(self.coefficient))
        object.__setattr__(self, "rotation", to_complex(self.rotation))

    @property
    def integral(self) -> bool:
        return isinstance(self.exponent, int)


def _positive(name: str, value: Number) -> mpf:
    value = mp.mpf(value)
    if value <= 0:
        raise InvalidInputError(f"{name} must be positive, got {mp.nstr(value, 10)}", {name: str(value)})
    return value


def _non_negative(name: str, value: Number) -> mpf:
    value = mp.mpf(value)
    if value < 0:
        raise InvalidInputError(f"{name} must be non-negative, got {mp.nstr(value, 10)}", {name: str(value)})
    return value


class Potential(ABC):
    """A potential V(x) defined by its power-law terms"""
    kind: ClassVar[FamilyKind]

    @abstractmethod
    def terms(self) -> Tuple[PowerTerm, ...]:
        ...

    @abstractmethod
    def stationary_locations(self) -> Tuple[mpc, ...]:
        """Closed-form roots of V′"""

    @abstractmethod
    def parameters(self) -> Dict[str, str]:
        ...

    @property
    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.parameters().items())
        kind = getattr(self, "kind", None)
        name = kind.value if kind is not None else type(self).__name__
        return f"{name}({args})"


@dataclass(frozen=True)
class IntegerFamily(Potential):
    """V(x) = x^(2m) + λ/x^(2n) with λ = m·R^(2(m+n))/n, m and n odd"""
    m: int
    n: int
    R: mpf
    kind: ClassVar[FamilyKind] = FamilyKind.INTEGER

    def __post_init__(self):
        for name, value in (("m", self.m), ("n", self.n)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1 or value % 2 == 0:
                raise InvalidInputError(f"{name} must be an odd positive integer, got {value!r}",
                                        {name: value})
        object.__setattr__(self, "R", _positive("R", self.R))

    @property
    def lam(self) -> mpf:
        return self.m * self.R ** (2 * (self.m + self.n)) / self.n

    def terms(self) -> Tuple[PowerTerm, ...]:
        return (PowerTerm(1, 1, 2 * self.m), PowerTerm(self.lam, 1, -2 * self.n))

    def stationary_locations(self) -> Tuple[mpc, ...]:
        # x^(2(m+n)) = nλ/m = R^(2(m+n))
        s = self.m + self.n
        return tuple(self.R * mp.expjpi(mpf(k) / s) for k in range(2 * s))

    def parameters(self) -> Dict[str, str]:
        return {"m": str(self.m), "n": str(self.n), "R": mp.nstr(self.R, 30)}


@dataclass(frozen=True)
class AlphaBeta(Potential):
    """V(x) = −(ix)^(2+α) − g²/(ix)^(6+β), principal branch, cut along the upward imaginary axis"""
    alpha: mpf
    beta: mpf
    g: mpf
    kind: ClassVar[FamilyKind] = FamilyKind.ALPHA_BETA

    def __post_init__(self):
        object.__setattr__(self, "alpha", _non_negative("alpha", self.alpha))
        object.__setattr__(self, "beta", _non_negative("beta", self.beta))
        object.__setattr__(self, "g", _positive("g", self.g))

    @property
    def total_exponent(self) -> mpf:
        return 8 + self.alpha + self.beta

    @property
    def T(self) -> mpf:
        """Distance of the −iT minimum from the origin: T^(8+α+β) = g²(6+β)/(2+α)"""
        return (self.g ** 2 * (6 + self.beta) / (2 + self.alpha)) ** (1 / self.total_exponent)

    @property
    def integral_exponents(self) -> bool:
        return self.alpha == mp.nint(self.alpha) and self.beta == mp.nint(self.beta)

    def terms(self) -> Tuple[PowerTerm, ...]:
        i = mpc(0, 1)
        return (PowerTerm(-1, i, 2 + self.alpha), PowerTerm(-self.g ** 2, i, -6 - self.beta))

    def stationary_locations(self) -> Tuple[mpc, ...]:
        # y = ix solves y^P = T^P; a fractional P keeps only the roots with |arg y| < π
        P = self.total_exponent
        if self.integral_exponents:
            ks = range(int(P))
        else:
            bound = int(mp.floor(P / 2))
            ks = [k for k in range(-bound, bound + 1) if 2 * abs(k) < P]
        T = self.T
        return tuple(mpc(0, -1) * T * mp.expjpi(2 * mpf(k) / P) for k in ks)

    def parameters(self) -> Dict[str, str]:
        return {"alpha": mp.nstr(self.alpha, 30), "beta": mp.nstr(self.beta, 30), "g": mp.nstr(self.g, 30)}


@dataclass(frozen=True)
class ShiftedSextic(Potential):
    """V(x) = x² + g²/x⁶, the α = β = 0 member written on the real line"""
    g: mpf
    kind: ClassVar[FamilyKind] = FamilyKind.SEXTIC

    def __post_init__(self):
        object.__setattr__(self, "g", _positive("g", self.g))

    @property
    def R(self) -> mpf:
        return (3 * self.g ** 2) ** (mpf(1) / 8)

    def terms(self) -> Tuple[PowerTerm, ...]:
        return (PowerTerm(1, 1, 2), PowerTerm(self.g ** 2, 1, -6))

    def stationary_locations(self) -> Tuple[mpc, ...]:
        R = self.R
        return tuple(R * mp.expjpi(mpf(k) / 4) for k in range(8))

    def parameters(self) -> Dict[str, str]:
        return {"g": mp.nstr(self.g, 30)}


@dataclass(frozen=True)
class StationaryPoint:
    location: mpc
    second_derivative: mpc
    admissible: bool
    index: int = 0
    failed_conditions: Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class ShiftedLine:
    """The complex line x(s) = s − iε"""
    epsilon: mpf

    def __post_init__(self):
        epsilon = mp.mpf(self.epsilon)
        if epsilon == 0:
            raise SingularityError("a line with ε = 0 passes through the singularity at the origin")
        if epsilon < 0:
            raise InvalidInputError(f"ε must be positive, got {mp.nstr(epsilon, 10)}",
                                    {"epsilon": str(epsilon)})
        object.__setattr__(self, "epsilon", epsilon)

    def point(self, s: Number) -> mpc:
        return mpc(mp.mpf(s), -self.epsilon)

"""Dual-mode non-negative scalars: exact rationals or log-domain reals.

Exact mode wraps fractions.Fraction and is closed under +, *, / with no
rounding, so identities can be asserted as equalities.  Log mode stores
the natural log of the value (with -inf as the distinguished zero) and
exists to reach parameter ranges where factorials overflow any fixed
precision; sums use a stable two-term log-sum-exp.
"""

import math
from fractions import Fraction

from .errors import DomainError

EXACT = "exact"
LOG = "log"
MODES = (EXACT, LOG)


def _logaddexp(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


class Scalar:
    """A non-negative number in one of two representations."""

    __slots__ = ("mode", "_frac", "_log")

    def __init__(self, mode: str, frac: Fraction | None = None, log: float | None = None):
        if mode not in MODES:
            raise DomainError(f"unknown scalar mode {mode!r}")
        self.mode = mode
        self._frac = frac
        self._log = log

    @classmethod
    def exact(cls, value) -> "Scalar":
        f = Fraction(value)
        if f < 0:
            raise DomainError("scalars are non-negative")
        return cls(EXACT, frac=f)

    @classmethod
    def from_log(cls, log_value: float) -> "Scalar":
        return cls(LOG, log=float(log_value))

    @classmethod
    def zero(cls, mode: str) -> "Scalar":
        return cls.exact(0) if mode == EXACT else cls.from_log(-math.inf)

    @classmethod
    def one(cls, mode: str) -> "Scalar":
        return cls.exact(1) if mode == EXACT else cls.from_log(0.0)

    @property
    def is_zero(self) -> bool:
        return self._frac == 0 if self.mode == EXACT else self._log == -math.inf

    def as_fraction(self) -> Fraction:
        if self.mode != EXACT:
            raise DomainError("log-domain scalar has no exact value")
        return self._frac

    def log_value(self) -> float:
        if self.mode == LOG:
            return self._log
        if self._frac == 0:
            return -math.inf
        # exact log of a rational via integer bit length, accurate for
        # arbitrarily large numerator/denominator
        num, den = self._frac.numerator, self._frac.denominator
        return _log_int(num) - _log_int(den)

    def to_float(self) -> float:
        if self.mode == EXACT:
            try:
                return float(self._frac)
            except OverflowError:
                return math.inf
        if self._log == -math.inf:
            return 0.0
        try:
            return math.exp(self._log)
        except OverflowError:
            return math.inf

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError("expected a Scalar")
        if self.mode != other.mode:
            raise DomainError("cannot mix exact and log-domain scalars")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if self.mode == EXACT:
            return Scalar.exact(self._frac + other._frac)
        return Scalar.from_log(_logaddexp(self._log, other._log))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if self.mode == EXACT:
            return Scalar.exact(self._frac * other._frac)
        return Scalar.from_log(self._log + other._log)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        if self.mode == EXACT:
            return Scalar.exact(self._frac / other._frac)
        return Scalar.from_log(self._log - other._log)

    def pow_int(self, k: int) -> "Scalar":
        if k < 0 and self.is_zero:
            raise ZeroDivisionError("zero to a negative power")
        if self.mode == EXACT:
            return Scalar.exact(self._frac ** k)
        return Scalar.from_log(self._log * k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar) or self.mode != other.mode:
            return NotImplemented
        return self._frac == other._frac if self.mode == EXACT else self._log == other._log

    def __lt__(self, other: "Scalar") -> bool:
        self._check(other)
        return self._frac < other._frac if self.mode == EXACT else self._log < other._log

    def __le__(self, other: "Scalar") -> bool:
        self._check(other)
        return self._frac <= other._frac if self.mode == EXACT else self._log <= other._log

    def __hash__(self):
        return hash((self.mode, self._frac, self._log))

    def __repr__(self) -> str:
        if self.mode == EXACT:
            return f"Scalar.exact({self._frac})"
        return f"Scalar.from_log({self._log})"

    def __str__(self) -> str:
        if self.mode == EXACT:
            f = self._frac
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        v = self.to_float()
        if v in (0.0, math.inf) and self._log not in (-math.inf,):
            return f"exp({self._log!r})"
        return repr(v)


def _log_int(n: int) -> float:
    """Natural log of a positive integer, exact for ints beyond float range."""
    if n <= 0:
        raise DomainError("log of non-positive integer")
    if n.bit_length() <= 512:
        return math.log(n)
    shift = n.bit_length() - 512
    return math.log(n >> shift) + shift * math.log(2)


def log_factorial(n: int) -> float:
    return math.lgamma(n + 1)


def relative_gap(a: Scalar, b: Scalar) -> float:
    """|a/b - 1| computed through logs; handles huge magnitudes."""
    if a.is_zero and b.is_zero:
        return 0.0
    if a.is_zero or b.is_zero:
        return math.inf
    return abs(math.expm1(a.log_value() - b.log_value()))

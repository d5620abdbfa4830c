"""Prime field arithmetic GF(p).

Coefficients of every polynomial in the package live here.  Values are
plain Python ints internally; :class:`Scalar` wraps one together with its
field so that mixing fields is caught early.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError, UsageError

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for n < 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not (2 <= self.p < MAX_MODULUS):
            raise UsageError(f"modulus must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise UsageError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> "Scalar":
        return Scalar(value % self.p, self)

    @property
    def zero(self) -> "Scalar":
        return Scalar(0, self)

    @property
    def one(self) -> "Scalar":
        return Scalar(1, self)

    def inv_int(self, a: int) -> int:
        """Inverse of the residue ``a``; raw-int counterpart of :func:`ff_inv`."""
        a %= self.p
        if a == 0:
            raise DomainError("zero has no inverse")
        _, x, _ = xgcd(a, self.p)
        return x % self.p

    def elements(self):
        return (Scalar(v, self) for v in range(self.p))


@dataclass(frozen=True)
class Scalar:
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise UsageError(f"{self.value} is not a canonical residue mod {self.field.p}")

    def _other(self, other) -> int:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise UsageError(f"field mismatch: GF({self.field.p}) vs GF({other.field.p})")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar((self.value + b) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar((self.value - b) % self.field.p, self.field)

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar((b - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.value * b % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.value % self.field.p, self.field)

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * self.field.inv_int(b)

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv_int(self.value), self.field)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def ff_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply ``op`` in {"add", "sub", "mul", "neg"}; ``neg`` ignores ``b``."""
    if op == "neg":
        return -a
    if b is None:
        raise UsageError(f"{op} needs two operands")
    if a.field != b.field:
        raise UsageError(f"field mismatch: GF({a.field.p}) vs GF({b.field.p})")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown field operation {op!r}")


def ff_inv(a: Scalar) -> Scalar:
    return a.inverse()


def ff_random(spec: FieldSpec, nonzero: bool, rng: random.Random) -> Scalar:
    lo = 1 if nonzero else 0
    return Scalar(rng.randrange(lo, spec.p), spec)

"""Arithmetic in the prime field F_p for a runtime-selected small prime p."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatch

SMALL_PRIMES = frozenset(
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
     53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
)


def check_prime(p: int) -> int:
    if p not in SMALL_PRIMES:
        raise ValueError(f"modulus must be a prime in [2, 97], got {p}")
    return p


@dataclass(frozen=True, slots=True)
class Fp:
    """An element of F_p, stored reduced to [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "Fp":
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pow__(self, e: int):
        return Fp(pow(self.value, e, self.p), self.p)

    def inv(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return Fp(pow(self.value, self.p - 2, self.p), self.p)

    def pth_root(self) -> "Fp":
        # Frobenius is the identity on the prime field: a^p = a.
        return self

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)

from dataclasses import dataclass
from functools import cached_property

from sympy import isprime

from ..errors import FieldError


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p. Polynomial code works on raw residues through it."""

    p: int

    def __post_init__(self):
        if self.p < 2 or not isprime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(value % self.p, self)

    def normalize(self, value: int) -> int:
        return value % self.p

    def inverse(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise FieldError("inverse of zero")
        return pow(value, -1, self.p)

    @cached_property
    def zero(self) -> "FieldElem":
        return FieldElem(0, self)

    @cached_property
    def one(self) -> "FieldElem":
        return FieldElem(1, self)

    def __str__(self) -> str:
        return f"F({self.p})"


@dataclass(frozen=True)
class FieldElem:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise FieldError(f"{self.value} is not a residue modulo {self.field.p}")

    def _coerce(self, other: "FieldElem | int") -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError("elements of different fields")
            return other.value
        return other % self.field.p

    def __add__(self, other: "FieldElem | int") -> "FieldElem":
        return self.field(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: "FieldElem | int") -> "FieldElem":
        return self.field(self.value - self._coerce(other))

    def __rsub__(self, other: int) -> "FieldElem":
        return self.field(self._coerce(other) - self.value)

    def __mul__(self, other: "FieldElem | int") -> "FieldElem":
        return self.field(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElem":
        return self.field(-self.value)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field.inverse(self.value), self.field)

    def __truediv__(self, other: "FieldElem | int") -> "FieldElem":
        return self * self.field.inverse(self._coerce(other))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from ..errors import AlgebraError, RingMismatchError
from .field import FieldElem, PrimeField
from .monomial import Exponents, Monomial, MonomialOrder, div_exps, divides, mul_exps
from .parsing import TokenStream, parse_polynomial

AUX_VARIABLE = "_t"


@dataclass(frozen=True)
class PolyRing:
    """
    A polynomial ring F_p[x_1, ..., x_n] with a fixed monomial order.

    Args:
        field: Coefficient field.
        variables: Variable names, most significant first.
        order: Monomial order used for leading terms.
    """

    field: PrimeField
    variables: tuple[str, ...]
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise AlgebraError(f"duplicate variable names in {self.variables}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def p(self) -> int:
        return self.field.p

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: value})

    def gen(self, index: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[index] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        if name not in self.variables:
            raise AlgebraError(f"unknown variable {name}")
        return self.gen(self.variables.index(name))

    def monomial(self, exps: Iterable[int], coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "Polynomial":
        """Read a polynomial written in the canonical text syntax."""
        stream = TokenStream.from_text(text)
        result = parse_polynomial(stream, self)
        stream.expect_end()
        return result

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        if order == self.order:
            return self
        return PolyRing(self.field, self.variables, order)

    def extended(self) -> "PolyRing":
        """The ring with one auxiliary variable in front, under elimination(1)."""
        return PolyRing(
            self.field, (AUX_VARIABLE, *self.variables), MonomialOrder.elimination(1)
        )

    def lift(self, f: "Polynomial") -> "Polynomial":
        """Embed a polynomial of this ring into `extended()`."""
        self.check(f)
        return Polynomial._trusted(
            self.extended(), {(0, *e): c for e, c in f.coeffs.items()}
        )

    def project(self, f: "Polynomial") -> "Polynomial":
        """Inverse of `lift` for polynomials free of the auxiliary variable."""
        if any(e[0] for e in f.coeffs):
            raise AlgebraError("polynomial involves the auxiliary variable")
        return Polynomial._trusted(self, {e[1:]: c for e, c in f.coeffs.items()})

    def check(self, *polys: "Polynomial") -> None:
        for f in polys:
            if f.ring != self:
                raise RingMismatchError(f"{f} does not live in {self}")

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}]"


class Polynomial:
    """
    Immutable sparse polynomial.

    Coefficients are kept as residues in a dict keyed by exponent vectors;
    the descending term list is computed on demand and cached.
    """

    def __init__(self, ring: PolyRing, coeffs: dict[Exponents, int]):
        p = ring.p
        clean: dict[Exponents, int] = {}
        for exps, c in coeffs.items():
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise RingMismatchError(
                    f"exponent vector {exps} has wrong length for {ring}"
                )
            c = (clean.get(exps, 0) + c) % p
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.ring = ring
        self.coeffs = clean

    @classmethod
    def _trusted(cls, ring: PolyRing, coeffs: dict[Exponents, int]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.coeffs = coeffs
        return poly

    @cached_property
    def sorted_exponents(self) -> list[Exponents]:
        return sorted(self.coeffs, key=self.ring.order.key, reverse=True)

    @property
    def terms(self) -> list[tuple[Monomial, FieldElem]]:
        field = self.ring.field
        return [
            (Monomial(e), FieldElem(self.coeffs[e], field))
            for e in self.sorted_exponents
        ]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.coeffs)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def leading_exponents(self) -> Exponents:
        if not self.coeffs:
            raise AlgebraError("the zero polynomial has no leading term")
        return self.sorted_exponents[0]

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[self.leading_exponents]

    def leading_monomial(self) -> Monomial:
        return Monomial(self.leading_exponents)

    @cached_property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.coeffs}) <= 1

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict[Exponents, int]] = {}
        for e, c in self.coeffs.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._trusted(self.ring, part) for d, part in parts.items()}

    def _same_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} and {other.ring} differ")

    def _coerce(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.ring.constant(other)
        self._same_ring(other)
        return other

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._coerce(other)
        p = self.ring.p
        result = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = (result.get(e, 0) + c) % p
            if v:
                result[e] = v
            else:
                result.pop(e, None)
        return Polynomial._trusted(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial._trusted(self.ring, {e: p - c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._same_ring(other)
        p = self.ring.p
        result: dict[Exponents, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = mul_exps(e1, e2)
                result[e] = (result.get(e, 0) + c1 * c2) % p
        return Polynomial._trusted(self.ring, {e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise AlgebraError("negative powers are not polynomials")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial._trusted(
            self.ring, {e: v * c % p for e, v in self.coeffs.items()}
        )

    def mul_term(self, exps: Exponents, c: int = 1) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial._trusted(
            self.ring, {mul_exps(e, exps): v * c % p for e, v in self.coeffs.items()}
        )

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(self.ring.field.inverse(self.leading_coefficient))

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """
        Quotient of an exact division.

        Raises:
            AlgebraError: If divisor is zero or does not divide self.
        """
        self._same_ring(divisor)
        if not divisor:
            raise AlgebraError("division by the zero polynomial")
        p = self.ring.p
        lead = divisor.leading_exponents
        inv = self.ring.field.inverse(divisor.leading_coefficient)
        remaining = self
        quotient: dict[Exponents, int] = {}
        while remaining:
            e = remaining.leading_exponents
            if not divides(lead, e):
                raise AlgebraError(f"{divisor} does not divide {self}")
            shift = div_exps(e, lead)
            c = remaining.coeffs[e] * inv % p
            quotient[shift] = c
            remaining = remaining - divisor.mul_term(shift, c)
        return Polynomial._trusted(self.ring, quotient)

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        """Reinterpret the same coefficients in a ring with the same variables."""
        if ring.nvars != self.ring.nvars or ring.p != self.ring.p:
            raise RingMismatchError(f"cannot move {self.ring} polynomials to {ring}")
        return Polynomial._trusted(ring, self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in self.sorted_exponents:
            c = self.coeffs[e]
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.ring.variables, e)
                if k
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c), *factors]))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """
    Apply one ring operation to two polynomials of the same ring.

    Args:
        f: Left operand.
        g: Right operand.
        op: One of "add", "sub", "mul".
    """
    f._same_ring(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")

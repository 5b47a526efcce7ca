from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable

from ..errors import RingMismatchError

Exponents = tuple[int, ...]


class OrderKind(str, Enum):
    DEGREVLEX = "degrevlex"
    ELIMINATION = "elimination"


class Ordering(int, Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@lru_cache(maxsize=1 << 16)
def _degrevlex_key(exps: Exponents) -> tuple[int, ...]:
    return (sum(exps), *(-e for e in reversed(exps)))


@lru_cache(maxsize=1 << 16)
def _elimination_key(exps: Exponents, block: int) -> tuple[int, ...]:
    head, tail = exps[:block], exps[block:]
    return (
        sum(head),
        *(-e for e in reversed(head)),
        sum(tail),
        *(-e for e in reversed(tail)),
    )


@dataclass(frozen=True)
class MonomialOrder:
    """
    A multiplicative well-order on monomials.

    `degrevlex` is the working order. `elimination(k)` compares the first k
    variables by degrevlex first and breaks ties by degrevlex on the rest,
    so any monomial involving the first block beats every monomial free of it.
    """

    kind: OrderKind = OrderKind.DEGREVLEX
    block: int = 0

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls(OrderKind.DEGREVLEX, 0)

    @classmethod
    def elimination(cls, block: int) -> "MonomialOrder":
        return cls(OrderKind.ELIMINATION, block)

    @property
    def key(self) -> Callable[[Exponents], tuple]:
        if self.kind == OrderKind.DEGREVLEX:
            return _degrevlex_key
        block = self.block
        return lambda exps: _elimination_key(exps, block)

    def __str__(self) -> str:
        if self.kind == OrderKind.DEGREVLEX:
            return "degrevlex"
        return f"elimination({self.block})"


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents
    degree: int = field(init=False)

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "exponents", tuple(self.exponents))
        object.__setattr__(self, "degree", sum(self.exponents))

    def __len__(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_lengths(self.exponents, other.exponents)
        return Monomial(mul_exps(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        _check_lengths(self.exponents, other.exponents)
        return divides(self.exponents, other.exponents)


def _check_lengths(a: Exponents, b: Exponents) -> None:
    if len(a) != len(b):
        raise RingMismatchError(
            f"monomials over {len(a)} and {len(b)} variables are not comparable"
        )


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> Ordering:
    """Three-way comparison of two monomials in the given order."""
    _check_lengths(m1.exponents, m2.exponents)
    k1, k2 = order.key(m1.exponents), order.key(m2.exponents)
    if k1 == k2:
        return Ordering.EQUAL
    return Ordering.GREATER if k1 > k2 else Ordering.LESS


def mul_exps(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def div_exps(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm_exps(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd_exps(a: Exponents, b: Exponents) -> Exponents:
    return tuple(min(x, y) for x, y in zip(a, b))


def coprime(a: Exponents, b: Exponents) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Exponents]:
    """All exponent vectors of the given total degree."""
    if nvars == 0:
        return [()] if degree == 0 else []
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return result


def minimalize_monomials(gens: list[Exponents]) -> list[Exponents]:
    """Drop monomial generators divisible by another generator."""
    kept: list[Exponents] = []
    for m in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return kept

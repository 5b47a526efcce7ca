"""
Standard graded rings A = P/J, viewed as local rings at the irrelevant ideal.

For homogeneous data the graded colength of an ideal equals its length after
localizing at m, so every length here is a staircase count in P.
"""

import threading
from typing import Callable, Iterable, TypeVar

from loguru import logger

from ..algebra.linalg import as_matrix, rank
from ..algebra.polynomial import PolyRing, Polynomial
from ..errors import AlgebraError, NotMPrimaryError, RingMismatchError
from ..groebner import (
    FreeIdeal,
    artinian_length,
    hilbert_function,
    ideal_colon,
    ideal_contains,
    ideal_equals,
    ideal_intersection,
    ideal_saturation,
    is_zero_dimensional,
    krull_dimension,
    normal_form,
)
from ..models.descriptions import RingDescription

T = TypeVar("T")


class QuotientRing:
    """
    A presented graded ring A = P/J with d = dim A > 0.

    Args:
        ambient: The polynomial ring P.
        relations: Homogeneous generators of J.
        name: Optional display name.
    """

    def __init__(
        self,
        ambient: PolyRing,
        relations: Iterable[Polynomial] = (),
        name: str | None = None,
    ):
        relations = list(relations)
        for f in relations:
            if not f.is_homogeneous():
                raise AlgebraError(f"defining relation {f} is not homogeneous")
        self.ambient = ambient
        self.name = name
        self.relations = tuple(f for f in relations if f)
        self.defining = FreeIdeal(ambient, self.relations).reduced()
        self.dim = krull_dimension(self.defining)
        if self.dim <= 0:
            raise AlgebraError(f"{self} has dimension {self.dim}; need d > 0")
        self._caches: dict[str, dict[tuple, object]] = {}
        self._lock = threading.Lock()

    @classmethod
    def polynomial_ring(cls, ambient: PolyRing, name: str | None = None) -> "QuotientRing":
        return cls(ambient, (), name)

    @classmethod
    def from_description(cls, description: RingDescription) -> "QuotientRing":
        from ..algebra.field import PrimeField

        ambient = PolyRing(PrimeField(description.prime), tuple(description.variables))
        return cls(
            ambient,
            [ambient.parse(text) for text in description.relations],
            description.name,
        )

    def describe(self) -> RingDescription:
        return RingDescription(
            name=self.name,
            prime=self.ambient.p,
            variables=list(self.ambient.variables),
            relations=[str(g) for g in self.defining.gens],
        )

    @property
    def maximal_ideal(self) -> "IdealHandle":
        return IdealHandle(self, self.ambient.gens())

    def ideal(self, gens: Iterable[Polynomial | str]) -> "IdealHandle":
        return IdealHandle(
            self,
            [self.ambient.parse(g) if isinstance(g, str) else g for g in gens],
        )

    def unit_ideal(self) -> "IdealHandle":
        return IdealHandle(self, [self.ambient.one()])

    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, [])

    def cached(self, kind: str, key: tuple, compute: Callable[[], T]) -> T:
        """Memoize a computation keyed by canonical ideal text. Compute-then-publish."""
        bucket = self._caches.setdefault(kind, {})
        if key in bucket:
            return bucket[key]  # type: ignore[return-value]
        value = compute()
        with self._lock:
            return bucket.setdefault(key, value)  # type: ignore[return-value]

    def __str__(self) -> str:
        return self.name or self.describe().to_text()


class IdealHandle:
    """
    An ideal of A given by preimages in P.

    The defining ideal is adjoined by every operation; two handles are equal
    iff their preimages plus J agree.
    """

    def __init__(self, ring: QuotientRing, gens: Iterable[Polynomial]):
        self.ring = ring
        self.preimage = FreeIdeal(ring.ambient, gens)
        self._full: FreeIdeal | None = None

    @classmethod
    def of(cls, ring: QuotientRing, ideal: FreeIdeal) -> "IdealHandle":
        return cls(ring, ideal.gens)

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return self.preimage.gens

    def full(self) -> FreeIdeal:
        """The preimage plus J, as an ideal of P."""
        if self._full is None:
            self._full = (self.preimage + self.ring.defining).reduced()
        return self._full

    def key(self) -> tuple[str, ...]:
        return self.full().key()

    def normalized(self) -> "IdealHandle":
        """
        Handle whose generators are the reduced Groebner basis of I + J,
        minus the elements already in J.
        """
        G = self.full().groebner()
        J = self.ring.defining.groebner()
        handle = IdealHandle(self.ring, [g for g in G if normal_form(g, J)])
        handle._full = self._full
        return handle

    def _check(self, other: "IdealHandle") -> None:
        if other.ring is not self.ring:
            raise RingMismatchError("ideals of different quotient rings")

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        self._check(other)
        return IdealHandle(self.ring, [*self.gens, *other.gens])

    def __mul__(self, other: "IdealHandle") -> "IdealHandle":
        self._check(other)
        return IdealHandle(
            self.ring, [f * g for f in self.normalized().gens for g in other.normalized().gens]
        )

    def __pow__(self, n: int) -> "IdealHandle":
        if n < 0:
            raise AlgebraError("negative ideal power")
        result = self.ring.unit_ideal()
        base = self.normalized()
        for _ in range(n):
            result = (result * base).normalized()
        return result

    def intersect(self, other: "IdealHandle") -> "IdealHandle":
        self._check(other)
        return IdealHandle.of(self.ring, ideal_intersection(self.full(), other.full()))

    def colon(self, other: "IdealHandle") -> "IdealHandle":
        """(I :_A K), computed as (I + J :_P K)."""
        self._check(other)
        if other.preimage.is_zero():
            return self.ring.unit_ideal()
        return IdealHandle.of(self.ring, ideal_colon(self.full(), other.preimage))

    def contains(self, f: Polynomial) -> bool:
        return self.full().contains(f)

    def contains_ideal(self, other: "IdealHandle") -> bool:
        self._check(other)
        return ideal_contains(self.full(), other.preimage)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return other.ring is self.ring and ideal_equals(self.full(), other.full())

    def __hash__(self) -> int:
        return hash(self.key())

    def is_unit(self) -> bool:
        return self.full().is_unit()

    def is_zero(self) -> bool:
        return ideal_equals(self.full(), self.ring.defining)

    def texts(self) -> list[str]:
        return [str(g) for g in self.gens]

    def __str__(self) -> str:
        return str(self.preimage)

    def __repr__(self) -> str:
        return f"IdealHandle{self.preimage}"


def is_m_primary(R: QuotientRing, I: IdealHandle) -> bool:
    """
    Whether I + J is primary to the irrelevant ideal.

    Zero-dimensional homogeneous ideals always are; otherwise every variable
    must have its ℓ-th power in I + J where ℓ is the colength.
    """
    full = I.full()
    if not is_zero_dimensional(full):
        return False
    if full.is_homogeneous():
        return True
    colength = artinian_length(full)
    return all(full.contains(x**colength) for x in R.ambient.gens())


def length(R: QuotientRing, I: IdealHandle) -> int:
    """
    ℓ(A/I) for an m-primary ideal.

    Raises:
        NotMPrimaryError: If I is not m-primary.
    """

    def compute() -> int:
        if I.is_unit():
            return 0
        if not is_m_primary(R, I):
            raise NotMPrimaryError(f"{I} is not m-primary in {R}")
        return artinian_length(I.full())

    return R.cached("length", I.key(), compute)


def h0_length(R: QuotientRing) -> tuple[int, IdealHandle]:
    """
    The length of U = H⁰_m(A) = (J : m^∞)/J and U itself.

    ℓ(U) is summed degreewise as HF_{P/J}(t) - HF_{P/S}(t) with S the
    saturation; the difference vanishes from the generator degree of S plus
    the saturation exponent on.
    """

    def compute() -> tuple[int, IdealHandle]:
        m = FreeIdeal.maximal(R.ambient)
        saturated, k = ideal_saturation(R.defining, m)
        saturated = saturated.reduced()
        if k == 0:
            return 0, R.zero_ideal()
        top = max(g.degree for g in saturated.gens) + k
        total = sum(
            hilbert_function(R.defining, t) - hilbert_function(saturated, t)
            for t in range(top)
        )
        logger.debug(f"H0 of {R}: length {total}, saturation exponent {k}")
        return total, IdealHandle.of(R, saturated)

    return R.cached("h0", (), compute)


def is_parameter_ideal(R: QuotientRing, gens: Iterable[Polynomial]) -> bool:
    gens = list(gens)
    if len(gens) != R.dim:
        return False
    return is_m_primary(R, IdealHandle(R, gens))


def minimal_generator_count(R: QuotientRing, I: IdealHandle) -> int:
    """
    μ(I) = dim_k I/mI, by rank of the generators modulo mI + J.

    Raises:
        AlgebraError: If I is not contained in m.
    """
    zero = (0,) * R.ambient.nvars
    if any(normal_form(f, R.defining.groebner()).coeffs.get(zero) for f in I.gens):
        raise AlgebraError(f"{I} is not contained in the maximal ideal")
    m = R.maximal_ideal
    K = (m.preimage * I.preimage + R.defining).reduced()
    G = K.groebner()
    vectors = [normal_form(f, G) for f in I.gens]
    columns = sorted({e for v in vectors for e in v.coeffs})
    if not columns:
        return 0
    index = {e: i for i, e in enumerate(columns)}
    rows = []
    for v in vectors:
        row = [0] * len(columns)
        for e, c in v.coeffs.items():
            row[index[e]] = c
        rows.append(row)
    return rank(as_matrix(rows, len(columns), R.ambient.p), R.ambient.p)


def purify(R: QuotientRing) -> tuple[QuotientRing, int]:
    """A/U with U = H⁰_m(A), and ℓ(U)."""
    ell, U = h0_length(R)
    if ell == 0:
        return R, 0
    name = f"{R.name}/H0" if R.name else None
    return QuotientRing(R.ambient, U.full().gens, name), ell


def slice_ring(R: QuotientRing, a: Polynomial) -> QuotientRing:
    """The ring A/(a) for a homogeneous element a."""
    R.ambient.check(a)
    return QuotientRing(R.ambient, [*R.defining.gens, a])


def ideal_in(ring: QuotientRing, I: IdealHandle) -> IdealHandle:
    """The image of I in a ring over the same ambient P."""
    if ring.ambient != I.ring.ambient:
        raise RingMismatchError("different ambient rings")
    return IdealHandle(ring, I.gens)

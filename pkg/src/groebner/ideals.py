"""
Ideals of a free polynomial ring and the ideal-arithmetic toolbox.

Everything here works in P itself; quotient rings adjoin their defining
ideal before calling in.
"""

import threading
from itertools import combinations
from typing import Iterable

from loguru import logger

from ..algebra.monomial import (
    Exponents,
    MonomialOrder,
    divides,
    gcd_exps,
    lcm_exps,
    minimalize_monomials,
    monomials_of_degree,
    div_exps,
)
from ..algebra.polynomial import PolyRing, Polynomial
from ..config import settings
from ..errors import (
    AlgebraError,
    IterationCapError,
    NotArtinianError,
    RingMismatchError,
)
from .buchberger import GroebnerBasis, compute_groebner_basis, normal_form


class FreeIdeal:
    """
    An ideal of a polynomial ring given by generators.

    Groebner bases are cached per monomial order. The cache is filled
    compute-then-publish under a lock, so concurrent readers only ever see
    complete bases.
    """

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = ()):
        self.ring = ring
        kept = []
        for f in gens:
            if f.ring != ring:
                if f.ring.variables != ring.variables or f.ring.p != ring.p:
                    raise RingMismatchError(f"{f} does not live in {ring}")
                f = f.change_ring(ring)
            if f and f not in kept:
                kept.append(f)
        self.gens: tuple[Polynomial, ...] = tuple(kept)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_groebner(cls, G: GroebnerBasis) -> "FreeIdeal":
        ideal = cls(G.ring, G.generators)
        ideal._gb[G.order] = G
        return ideal

    @classmethod
    def unit(cls, ring: PolyRing) -> "FreeIdeal":
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring: PolyRing) -> "FreeIdeal":
        """The irrelevant ideal (x_1, ..., x_n)."""
        return cls(ring, ring.gens())

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        cached = self._gb.get(order)
        if cached is not None:
            return cached
        G = compute_groebner_basis(self.ring, self.gens, order)
        with self._lock:
            return self._gb.setdefault(order, G)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.gens)

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.gens)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self.groebner())

    def reduced(self) -> "FreeIdeal":
        """The same ideal generated by its reduced Groebner basis."""
        return FreeIdeal.from_groebner(self.groebner())

    def key(self) -> tuple[str, ...]:
        return self.groebner().key()

    def __add__(self, other: "FreeIdeal") -> "FreeIdeal":
        return ideal_combine(self, other, "sum")

    def __mul__(self, other: "FreeIdeal") -> "FreeIdeal":
        return ideal_combine(self, other, "product")

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.gens) + ")" if self.gens else "(0)"

    def __repr__(self) -> str:
        return f"FreeIdeal{self}"


def _check_same_ring(I: FreeIdeal, J: FreeIdeal) -> None:
    if I.ring.variables != J.ring.variables or I.ring.p != J.ring.p:
        raise RingMismatchError(f"ideals of {I.ring} and {J.ring}")


def groebner_basis(I: FreeIdeal, order: MonomialOrder | None = None) -> GroebnerBasis:
    return I.groebner(order)


def ideal_combine(I: FreeIdeal, J: FreeIdeal, op: str) -> FreeIdeal:
    """
    Sum or product of two ideals.

    Args:
        I: First ideal.
        J: Second ideal.
        op: "sum" concatenates generators, "product" takes pairwise products.
    """
    _check_same_ring(I, J)
    if op == "sum":
        return FreeIdeal(I.ring, [*I.gens, *J.gens])
    if op == "product":
        return FreeIdeal(I.ring, [f * g for f in I.gens for g in J.gens])
    raise ValueError(f"unknown ideal operation {op!r}")


def ideal_power(I: FreeIdeal, n: int) -> FreeIdeal:
    if n < 0:
        raise AlgebraError("negative ideal power")
    result = FreeIdeal.unit(I.ring)
    for _ in range(n):
        result = _tidy(result * I)
    return result


def _tidy(I: FreeIdeal) -> FreeIdeal:
    if I.is_monomial():
        return _monomial_ideal(I.ring, [f.leading_exponents for f in I.gens])
    return I.reduced()


def _monomial_ideal(ring: PolyRing, exps: Iterable[Exponents]) -> FreeIdeal:
    return FreeIdeal(ring, [ring.monomial(e) for e in minimalize_monomials(list(exps))])


def ideal_intersection(I: FreeIdeal, J: FreeIdeal) -> FreeIdeal:
    """
    I ∩ J by eliminating t from t·I + (1 - t)·J.

    Monomial ideals take the pairwise-lcm shortcut.
    """
    _check_same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return FreeIdeal(ring)
    if I.is_monomial() and J.is_monomial():
        return _monomial_ideal(
            ring,
            (
                lcm_exps(f.leading_exponents, g.leading_exponents)
                for f in I.gens
                for g in J.gens
            ),
        )
    ext = ring.extended()
    t = ext.gen(0)
    gens = [t * ring.lift(f) for f in I.gens] + [
        (1 - t) * ring.lift(g) for g in J.gens
    ]
    G = compute_groebner_basis(ext, gens)
    kept = [ring.project(g) for g in G if not g.leading_exponents[0]]
    if ring.order == MonomialOrder.degrevlex():
        return FreeIdeal.from_groebner(GroebnerBasis(ring, kept))
    return FreeIdeal(ring, kept)


def _colon_principal(I: FreeIdeal, f: Polynomial) -> FreeIdeal:
    ring = I.ring
    if f.is_constant() or I.is_zero():
        return I
    if I.is_monomial() and f.is_monomial():
        m = f.leading_exponents
        return _monomial_ideal(
            ring,
            (div_exps(g.leading_exponents, gcd_exps(g.leading_exponents, m)) for g in I.gens),
        )
    K = ideal_intersection(I, FreeIdeal(ring, [f]))
    return FreeIdeal(ring, [g.exact_divide(f) for g in K.gens])


def ideal_colon(I: FreeIdeal, J: FreeIdeal) -> FreeIdeal:
    """
    The colon ideal (I : J), intersected over the generators of J.

    Raises:
        AlgebraError: If J is the zero ideal.
    """
    _check_same_ring(I, J)
    if J.is_zero():
        raise AlgebraError("colon by the zero ideal")
    result: FreeIdeal | None = None
    for f in J.gens:
        part = _colon_principal(I, f)
        result = part if result is None else ideal_intersection(result, part)
    assert result is not None
    return result


def ideal_saturation(
    I: FreeIdeal, J: FreeIdeal, cap: int | None = None
) -> tuple[FreeIdeal, int]:
    """
    (I : J^∞) by iterated colons.

    Args:
        I: Ideal to saturate.
        J: Saturating ideal.
        cap: Maximum number of colon steps. Defaults to settings.

    Returns:
        The saturation and the least k with (I : J^k) = (I : J^(k+1)).

    Raises:
        IterationCapError: If the chain has not stabilized after cap steps.
    """
    cap = settings.SATURATION_CAP if cap is None else cap
    current = I
    for k in range(cap + 1):
        following = ideal_colon(current, J)
        if ideal_equals(following, current):
            logger.debug(f"Saturation stabilized at k={k}")
            return current, k
        current = following
    raise IterationCapError(f"saturation did not stabilize within {cap} steps")


def ideal_contains(I: FreeIdeal, J: FreeIdeal) -> bool:
    """Whether J ⊆ I."""
    _check_same_ring(I, J)
    G = I.groebner()
    return all(not normal_form(f, G) for f in J.gens)


def ideal_equals(I: FreeIdeal, J: FreeIdeal) -> bool:
    return ideal_contains(I, J) and ideal_contains(J, I)


def krull_dimension(I: FreeIdeal) -> int:
    """
    Dimension of P/I from the leading-monomial ideal.

    Returns:
        The size of the largest set of variables containing the support of
        no leading monomial; -1 for the unit ideal.
    """
    G = I.groebner()
    if G.is_unit():
        return -1
    supports = [
        frozenset(i for i, e in enumerate(lead) if e) for lead in G.leading_monomials
    ]
    n = I.ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def is_zero_dimensional(I: FreeIdeal) -> bool:
    G = I.groebner()
    if G.is_unit():
        return False
    pure = {
        next(i for i, e in enumerate(lead) if e)
        for lead in G.leading_monomials
        if sum(1 for e in lead if e) == 1
    }
    return len(pure) == I.ring.nvars


def standard_monomials(I: FreeIdeal) -> list[Exponents]:
    """
    The staircase of a zero-dimensional ideal.

    Raises:
        NotArtinianError: If P/I is not finite-dimensional.
    """
    G = I.groebner()
    if G.is_unit():
        return []
    if not is_zero_dimensional(I):
        raise NotArtinianError(f"{I} is not zero-dimensional")
    leads = G.leading_monomials
    n = I.ring.nvars
    start = (0,) * n
    seen = {start}
    frontier = [start]
    while frontier:
        exps = frontier.pop()
        for i in range(n):
            nxt = exps[:i] + (exps[i] + 1,) + exps[i + 1 :]
            if nxt not in seen and not any(divides(lead, nxt) for lead in leads):
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen, key=I.ring.order.key)


def artinian_length(I: FreeIdeal) -> int:
    """ℓ(P/I) = dim_k P/I as the number of standard monomials."""
    return len(standard_monomials(I))


def hilbert_function(I: FreeIdeal, degree: int) -> int:
    """dim_k (P/I)_t for a homogeneous ideal I."""
    if degree < 0:
        return 0
    leads = I.groebner().leading_monomials
    return sum(
        1
        for exps in monomials_of_degree(I.ring.nvars, degree)
        if not any(divides(lead, exps) for lead in leads)
    )

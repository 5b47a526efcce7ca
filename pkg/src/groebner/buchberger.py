"""Buchberger's algorithm and normal forms."""

import heapq
from functools import cached_property
from typing import Iterable, Sequence

from loguru import logger

from ..algebra.monomial import (
    Exponents,
    MonomialOrder,
    coprime,
    div_exps,
    divides,
    lcm_exps,
)
from ..algebra.polynomial import PolyRing, Polynomial


class GroebnerBasis:
    """
    A reduced Groebner basis: monic, auto-reduced, sorted by descending leading monomial.

    Instances are built by `compute_groebner_basis` and never mutated.
    """

    def __init__(self, ring: PolyRing, generators: Sequence[Polynomial]):
        self.ring = ring
        self.generators = tuple(generators)

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @cached_property
    def leading_monomials(self) -> list[Exponents]:
        return [g.leading_exponents for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def key(self) -> tuple[str, ...]:
        """Canonical text of the generators; equal ideals give equal keys."""
        return tuple(str(g) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


def _divisor_index(leads: Sequence[Exponents], exps: Exponents) -> int:
    for i, lead in enumerate(leads):
        if divides(lead, exps):
            return i
    return -1


def _reduce(
    f: Polynomial, basis: Sequence[Polynomial], leads: Sequence[Exponents]
) -> Polynomial:
    ring = f.ring
    p = ring.p
    key = ring.order.key
    remaining = dict(f.coeffs)
    heap = [(tuple(-k for k in key(e)), e) for e in remaining]
    heapq.heapify(heap)
    result: dict[Exponents, int] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = remaining.pop(e, 0)
        if not c:
            continue
        i = _divisor_index(leads, e)
        if i < 0:
            result[e] = c
            continue
        g = basis[i]
        shift = div_exps(e, leads[i])
        factor = c * ring.field.inverse(g.coeffs[leads[i]]) % p
        for ge, gc in g.coeffs.items():
            if ge == leads[i]:
                continue
            ne = tuple(a + b for a, b in zip(ge, shift))
            old = remaining.get(ne)
            value = ((old or 0) - factor * gc) % p
            if value:
                if old is None:
                    heapq.heappush(heap, (tuple(-k for k in key(ne)), ne))
                remaining[ne] = value
            elif old is not None:
                del remaining[ne]
    return Polynomial._trusted(ring, result)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """
    Fully reduce f modulo G.

    Args:
        f: Polynomial over the same variables as G.
        G: Groebner basis.

    Returns:
        The normal form, zero exactly when f lies in the ideal of G.
    """
    if f.ring != G.ring:
        f = f.change_ring(G.ring)
    if not f or G.is_zero():
        return f
    return _reduce(f, G.generators, G.leading_monomials)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_exponents, g.leading_exponents
    lcm = lcm_exps(lf, lg)
    return f.mul_term(div_exps(lcm, lf)) - g.mul_term(div_exps(lcm, lg))


def compute_groebner_basis(
    ring: PolyRing, polys: Iterable[Polynomial], order: MonomialOrder | None = None
) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by polys.

    Pairs are processed in the normal strategy (smallest lcm first, ties
    broken by index) with the coprime and chain criteria.

    Args:
        ring: Ambient ring; its order is used unless order is given.
        polys: Generators, zero entries allowed.
        order: Optional order overriding the ring's.

    Returns:
        The reduced basis over `ring.with_order(order)`.
    """
    ring = ring.with_order(order or ring.order)
    key = ring.order.key
    inputs = [f.change_ring(ring) for f in polys if f]
    if any(f.is_constant() for f in inputs):
        return GroebnerBasis(ring, [ring.one()])
    inputs.sort(key=lambda f: key(f.leading_exponents))

    basis: list[Polynomial] = []
    leads: list[Exponents] = []
    queue: list[tuple[tuple[int, ...], int, int]] = []
    pending: set[tuple[int, int]] = set()

    def add(h: Polynomial) -> bool:
        h = h.monic()
        k = len(basis)
        basis.append(h)
        leads.append(h.leading_exponents)
        for i in range(k):
            heapq.heappush(queue, (key(lcm_exps(leads[i], leads[k])), i, k))
            pending.add((i, k))
        return h.is_constant()

    for f in inputs:
        h = _reduce(f, basis, leads)
        if h and add(h):
            return GroebnerBasis(ring, [ring.one()])

    reductions = 0
    while queue:
        _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        if coprime(leads[i], leads[j]):
            continue
        lcm = lcm_exps(leads[i], leads[j])
        if any(
            k not in (i, j)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            and divides(leads[k], lcm)
            for k in range(len(basis))
        ):
            continue
        h = _reduce(_spoly(basis[i], basis[j]), basis, leads)
        reductions += 1
        if h and add(h):
            return GroebnerBasis(ring, [ring.one()])

    logger.debug(f"Buchberger: {len(basis)} elements after {reductions} reductions")
    return GroebnerBasis(ring, _interreduce(basis))


def _interreduce(basis: list[Polynomial]) -> list[Polynomial]:
    if not basis:
        return []
    minimal: list[Polynomial] = []
    for idx, g in enumerate(basis):
        lead = g.leading_exponents
        if any(
            divides(h.leading_exponents, lead)
            and (h.leading_exponents != lead or jdx < idx)
            for jdx, h in enumerate(basis)
            if jdx != idx
        ):
            continue
        minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        reduced.append(
            _reduce(g, others, [h.leading_exponents for h in others]).monic()
        )
    key = basis[0].ring.order.key
    reduced.sort(key=lambda f: key(f.leading_exponents), reverse=True)
    return reduced

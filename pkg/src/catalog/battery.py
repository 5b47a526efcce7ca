"""
Built-in rings for tests, self-tests and demonstrations.

Every ring is standard graded over F_p; the labels are stable so battery
reports can be compared across runs.
"""

import random

from loguru import logger

from ..algebra.field import PrimeField
from ..algebra.monomial import monomials_of_degree
from ..algebra.polynomial import PolyRing, Polynomial
from ..config import settings
from ..filtrations import Filtration, random_combination
from ..invariants import find_standard_sop
from ..rings import QuotientRing


def _ring(variables: str, relations: list[str], name: str, prime: int | None) -> QuotientRing:
    ambient = PolyRing(PrimeField(prime or settings.PRIME), tuple(variables.split(",")))
    return QuotientRing(ambient, [ambient.parse(text) for text in relations], name)


def plane(prime: int | None = None) -> QuotientRing:
    """F_p[x,y]."""
    return _ring("x,y", [], "plane", prime)


def space(prime: int | None = None) -> QuotientRing:
    """F_p[x,y,z]."""
    return _ring("x,y,z", [], "space", prime)


def quadric(prime: int | None = None, seed: int | None = None) -> QuotientRing:
    """
    A hypersurface F_p[x,y,z]/(q) with q a quadric.

    With a seed, q is a random combination of the degree-2 monomials;
    without one it is x^2 + y^2 + z^2.
    """
    if seed is None:
        return _ring("x,y,z", ["x^2 + y^2 + z^2"], "quadric", prime)
    ambient = PolyRing(PrimeField(prime or settings.PRIME), ("x", "y", "z"))
    rng = random.Random(seed)
    pool = [ambient.monomial(e) for e in monomials_of_degree(3, 2)]
    q = ambient.zero()
    while not q:
        q = random_combination(pool, rng, ambient.p)
    return QuotientRing(ambient, [q], f"quadric[{seed}]")


def embedded_point(prime: int | None = None) -> QuotientRing:
    """F_p[x,y]/(x^2, xy): a line with an embedded point, Buchsbaum of invariant 1."""
    return _ring("x,y", ["x^2", "x*y"], "embedded_point", prime)


def two_planes(prime: int | None = None) -> QuotientRing:
    """F_p[x,y,z,w]/(xz, xw, yz, yw): two planes meeting at a point."""
    return _ring("x,y,z,w", ["x*z", "x*w", "y*z", "y*w"], "two_planes", prime)


def plane_and_line(prime: int | None = None) -> QuotientRing:
    """F_p[x,y,z]/(xy, xz): a plane and a line, not Buchsbaum."""
    return _ring("x,y,z", ["x*y", "x*z"], "plane_and_line", prime)


def cohen_macaulay_rings(prime: int | None = None) -> list[QuotientRing]:
    return [plane(prime), space(prime), quadric(prime)]


def buchsbaum_rings(prime: int | None = None) -> list[QuotientRing]:
    return [embedded_point(prime), two_planes(prime)]


def parameter_filtration(R: QuotientRing, seed: int | None = None) -> Filtration:
    """The adic filtration of a standard system of parameters."""
    sop: list[Polynomial] = find_standard_sop(R, seed=seed)
    return Filtration.adic(R.ideal(sop))


def default_battery(
    prime: int | None = None, seed: int | None = None
) -> list[tuple[str, Filtration]]:
    """
    (label, filtration) pairs covering m-adic, parameter-adic and
    Ratliff-Rush filtrations over the Cohen-Macaulay and Buchsbaum rings.
    """
    seed = settings.SEED if seed is None else seed
    battery: list[tuple[str, Filtration]] = []
    for R in cohen_macaulay_rings(prime) + buchsbaum_rings(prime):
        battery.append((f"{R.name}/adic(m)", Filtration.adic(R.maximal_ideal)))
        battery.append((f"{R.name}/adic(Q)", parameter_filtration(R, seed)))
    R = plane(prime)
    battery.append(
        (
            "plane/rr(x^4,x^3*y,x*y^3,y^4)",
            Filtration.ratliff_rush(R.ideal(["x^4", "x^3*y", "x*y^3", "y^4"])),
        )
    )
    logger.debug(f"Battery of {len(battery)} filtrations")
    return battery

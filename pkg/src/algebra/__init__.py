from .field import PrimeField, FieldElem
from .monomial import Monomial, MonomialOrder, OrderKind, Ordering, compare
from .polynomial import PolyRing, Polynomial, poly_arith

__all__ = [
    "PrimeField",
    "FieldElem",
    "Monomial",
    "MonomialOrder",
    "OrderKind",
    "Ordering",
    "compare",
    "PolyRing",
    "Polynomial",
    "poly_arith",
]

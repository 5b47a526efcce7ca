import random

import pytest

from src.algebra.linalg import as_matrix, rank
from src.algebra.monomial import monomials_of_degree
from src.errors import AlgebraError, IterationCapError, NotArtinianError
from src.groebner import (
    FreeIdeal,
    artinian_length,
    compute_groebner_basis,
    groebner_basis,
    hilbert_function,
    ideal_colon,
    ideal_combine,
    ideal_contains,
    ideal_equals,
    ideal_intersection,
    ideal_power,
    ideal_saturation,
    is_zero_dimensional,
    krull_dimension,
    standard_monomials,
)
from tests.conftest import random_form


def test_monomial_intersection(P2):
    """Test that (x) ∩ (y) = (xy)."""
    x, y = P2.gens()
    result = ideal_intersection(FreeIdeal(P2, [x]), FreeIdeal(P2, [y]))
    assert ideal_equals(result, FreeIdeal(P2, [x * y]))


def test_intersection_by_elimination(P2):
    """Test that (x + y) ∩ (x - y) = (x^2 - y^2)."""
    x, y = P2.gens()
    result = ideal_intersection(FreeIdeal(P2, [x + y]), FreeIdeal(P2, [x - y]))
    assert ideal_equals(result, FreeIdeal(P2, [x**2 - y**2]))
    assert result.ring == P2


def test_monomial_colon(P2):
    """Test that (x^2, xy) : (x) = (x, y)."""
    x, y = P2.gens()
    result = ideal_colon(FreeIdeal(P2, [x**2, x * y]), FreeIdeal(P2, [x]))
    assert ideal_equals(result, FreeIdeal.maximal(P2))


def test_colon_by_polynomial(P2):
    """Test that (x^2 - y^2) : (x + y) = (x - y)."""
    x, y = P2.gens()
    result = ideal_colon(FreeIdeal(P2, [x**2 - y**2]), FreeIdeal(P2, [x + y]))
    assert ideal_equals(result, FreeIdeal(P2, [x - y]))


def test_colon_by_zero_ideal_raises(P2):
    """Test that a colon by the zero ideal is rejected."""
    with pytest.raises(AlgebraError, match="zero ideal"):
        ideal_colon(FreeIdeal(P2, [P2.gen(0)]), FreeIdeal(P2))


def test_saturation_removes_embedded_point(P2):
    """Test that (x^2, xy) saturates to (x) after one step."""
    x, y = P2.gens()
    saturated, k = ideal_saturation(FreeIdeal(P2, [x**2, x * y]), FreeIdeal.maximal(P2))
    assert ideal_equals(saturated, FreeIdeal(P2, [x]))
    assert k == 1


def test_saturation_cap(P2):
    """Test that the saturation cap is enforced."""
    x, y = P2.gens()
    with pytest.raises(IterationCapError):
        ideal_saturation(FreeIdeal(P2, [x**3, x * y]), FreeIdeal.maximal(P2), cap=0)


def test_containment_direction(P2):
    """Test that ideal_contains(I, J) means J ⊆ I."""
    x, y = P2.gens()
    m = FreeIdeal.maximal(P2)
    square = ideal_power(m, 2)
    assert ideal_contains(m, square)
    assert not ideal_contains(square, m)


def test_krull_dimension(P2):
    """Test dimensions of a few quotients."""
    x, y = P2.gens()
    assert krull_dimension(FreeIdeal(P2)) == 2
    assert krull_dimension(FreeIdeal(P2, [x**2, x * y])) == 1
    assert krull_dimension(FreeIdeal.maximal(P2)) == 0
    assert krull_dimension(FreeIdeal.unit(P2)) == -1


def test_standard_monomials_of_staircase(P2):
    """Test the staircase of (x^2 + y^2, xy)."""
    x, y = P2.gens()
    I = FreeIdeal(P2, [x**2 + y**2, x * y])
    assert is_zero_dimensional(I)
    assert sorted(standard_monomials(I)) == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert artinian_length(I) == 4


def test_standard_monomials_requires_zero_dimension(P2):
    """Test that positive-dimensional ideals have no finite staircase."""
    with pytest.raises(NotArtinianError):
        standard_monomials(FreeIdeal(P2, [P2.gen(0)]))


def test_hilbert_function(P2):
    """Test the Hilbert function of P/(x^2, xy)."""
    x, y = P2.gens()
    I = FreeIdeal(P2, [x**2, x * y])
    assert [hilbert_function(I, t) for t in range(5)] == [1, 2, 1, 1, 1]


def _brute_colength(gens, ring):
    total, degree = 0, 0
    while True:
        columns = monomials_of_degree(ring.nvars, degree)
        index = {e: i for i, e in enumerate(columns)}
        rows = []
        for g in gens:
            if g.degree > degree:
                continue
            for shift in monomials_of_degree(ring.nvars, degree - g.degree):
                row = [0] * len(columns)
                for e, c in g.mul_term(shift).coeffs.items():
                    row[index[e]] = c
                rows.append(row)
        filled = rank(as_matrix(rows, len(columns), ring.p), ring.p)
        if filled == len(columns):
            return total
        total += len(columns) - filled
        degree += 1


def test_length_agrees_with_brute_force(P3):
    """Test that staircase counts match degreewise dimensions."""
    rng = random.Random(3)
    x, y, z = P3.gens()
    for _ in range(50):
        a, b, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        gens = [x**a, y**b, z**c] + [random_form(P3, rng.randint(1, 2), rng) for _ in range(2)]
        assert artinian_length(FreeIdeal(P3, gens)) == _brute_colength(gens, P3)


def _random_ideal(ring, rng):
    return FreeIdeal(
        ring, [random_form(ring, rng.randint(1, 2), rng) for _ in range(rng.randint(1, 2))]
    )


def test_intersection_and_product_inclusions(P3):
    """Test that I∩J lies in I and in J, and that IJ lies in I∩J, on random ideals."""
    rng = random.Random(31)
    for _ in range(15):
        I, J = _random_ideal(P3, rng), _random_ideal(P3, rng)
        meet = ideal_intersection(I, J)
        assert ideal_contains(I, meet)
        assert ideal_contains(J, meet)
        assert ideal_contains(meet, I * J)


def test_colon_times_divisor_lies_in_ideal(P3):
    """Test that (I : J)·J ⊆ I on random ideals."""
    rng = random.Random(37)
    for _ in range(15):
        I, J = _random_ideal(P3, rng), _random_ideal(P3, rng)
        assert ideal_contains(I, ideal_colon(I, J) * J)


def test_groebner_basis_is_stable(P3):
    """Test that identical inputs give identical reduced bases."""
    rng = random.Random(41)
    for _ in range(10):
        I = _random_ideal(P3, rng)
        again = FreeIdeal(P3, list(I.gens))
        assert groebner_basis(I).key() == groebner_basis(again).key()
        assert groebner_basis(I).key() == compute_groebner_basis(P3, list(I.gens)).key()


def test_ideal_combine(P2):
    """Test sums and products of ideals and the unknown-operation error."""
    x, y = P2.gens()
    I, J = FreeIdeal(P2, [x]), FreeIdeal(P2, [y])
    assert ideal_equals(ideal_combine(I, J, "sum"), FreeIdeal.maximal(P2))
    assert ideal_equals(ideal_combine(I, J, "product"), FreeIdeal(P2, [x * y]))
    with pytest.raises(ValueError, match="unknown ideal operation"):
        ideal_combine(I, J, "quotient")

import random

import pytest

from src.algebra import PolyRing, PrimeField, poly_arith
from src.errors import AlgebraError, FieldError, ParseError, RingMismatchError, SemanticError
from tests.conftest import random_form


def test_prime_field_rejects_composite_modulus():
    """Test that a composite modulus is rejected."""
    with pytest.raises(FieldError, match="not prime"):
        PrimeField(10)


def test_field_inverse_of_zero_raises():
    """Test that inverting zero raises a FieldError."""
    with pytest.raises(FieldError, match="inverse of zero"):
        PrimeField(7).inverse(0)


def test_field_element_arithmetic():
    """Test that field elements reduce modulo p."""
    F = PrimeField(7)
    assert F(3) + F(5) == F(1)
    assert F(3) * F(5) == F(1)
    assert F(2) / F(4) == F(4)
    assert -F(1) == F(6)


def test_canonical_printing(P2):
    """Test that polynomials print in descending degrevlex with residues."""
    x, y = P2.gens()
    f = x**2 - x * y
    assert str(f) == "x^2 + 32002*x*y"
    assert str(P2.zero()) == "0"
    assert str(3 * y**3 + 1) == "3*y^3 + 1"


def test_parse_reads_canonical_text_back(P2):
    """Test that parsing the printed form gives the same polynomial."""
    x, y = P2.gens()
    f = x**3 - 5 * x * y**2 + 7
    assert P2.parse(str(f)) == f


def test_parse_expression_syntax(P2):
    """Test that parentheses, powers and unary minus are parsed."""
    x, y = P2.gens()
    assert P2.parse("(x+y)^2") == x**2 + 2 * x * y + y**2
    assert P2.parse("-x*-y") == x * y
    assert P2.parse("32005*x") == 2 * x


def test_parse_unknown_variable(P2):
    """Test that an unknown variable is a semantic error with location."""
    with pytest.raises(SemanticError, match="unknown variable z") as info:
        P2.parse("x + z")
    assert info.value.column == 5


def test_parse_bad_character(P2):
    """Test that stray characters are rejected."""
    with pytest.raises(ParseError, match="unexpected character"):
        P2.parse("x $ y")


def test_exact_divide(P2):
    """Test that exact division returns the quotient."""
    x, y = P2.gens()
    assert (x**2 - y**2).exact_divide(x - y) == x + y


def test_exact_divide_rejects_remainder(P2):
    """Test that a non-divisor raises an AlgebraError."""
    x, y = P2.gens()
    with pytest.raises(AlgebraError, match="does not divide"):
        (x**2 + y).exact_divide(x)


def test_homogeneity_and_degree(P2):
    """Test homogeneity checks, degrees and homogeneous components."""
    x, y = P2.gens()
    f = x**2 + y
    assert not f.is_homogeneous()
    assert (x * y + y**2).is_homogeneous()
    assert f.degree == 2
    assert P2.zero().degree == -1
    assert f.homogeneous_components()[1] == y


def test_leading_term_in_degrevlex(P3):
    """Test that y^2 leads x*z in degrevlex."""
    x, y, z = P3.gens()
    f = x * z + y**2
    assert f.leading_exponents == (0, 2, 0)


def test_lift_and_project(P2):
    """Test that lifting into the extended ring and projecting back is the identity."""
    x, y = P2.gens()
    f = x**2 + 3 * y
    lifted = P2.lift(f)
    assert lifted.ring.variables == ("_t", "x", "y")
    assert P2.project(lifted) == f


def test_mixing_rings_raises(P2, P3):
    """Test that arithmetic across rings raises RingMismatchError."""
    with pytest.raises(RingMismatchError):
        P2.gen(0) + P3.gen(0)


def test_duplicate_variables_rejected():
    """Test that duplicate variable names are rejected."""
    with pytest.raises(AlgebraError, match="duplicate"):
        PolyRing(PrimeField(7), ("x", "x"))


def test_field_axioms_on_random_elements():
    """Test associativity, distributivity and inverses on random residues."""
    F = PrimeField(32003)
    rng = random.Random(2)
    for _ in range(300):
        a, b, c = (F(rng.randrange(F.p)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == F.zero
        if a:
            assert a * a.inverse() == F.one


def _random_polynomial(ring, rng):
    f = ring.constant(rng.randrange(ring.p))
    for degree in rng.sample(range(1, 4), 2):
        f = f + random_form(ring, degree, rng)
    return f


def test_poly_arith_ring_laws(P3):
    """Test that add and mul are commutative and associative, and sub undoes add."""
    rng = random.Random(9)
    for _ in range(40):
        f, g, h = (_random_polynomial(P3, rng) for _ in range(3))
        assert poly_arith(f, g, "add") == poly_arith(g, f, "add")
        assert poly_arith(f, g, "mul") == poly_arith(g, f, "mul")
        left, right = poly_arith(f, g, "add"), poly_arith(g, h, "add")
        assert poly_arith(left, h, "add") == poly_arith(f, right, "add")
        left, right = poly_arith(f, g, "mul"), poly_arith(g, h, "mul")
        assert poly_arith(left, h, "mul") == poly_arith(f, right, "mul")
        assert poly_arith(poly_arith(f, g, "add"), g, "sub") == f
        assert poly_arith(f, P3.zero(), "mul") == P3.zero()


def test_canonical_form_is_idempotent(P3):
    """Test that printing, parsing and printing again gives the same text."""
    rng = random.Random(10)
    for _ in range(40):
        text = str(_random_polynomial(P3, rng))
        assert str(P3.parse(text)) == text


def test_poly_arith_rejects_unknown_operation(P2, P3):
    """Test that unknown operations and mixed rings are refused."""
    x, _ = P2.gens()
    with pytest.raises(ValueError, match="unknown polynomial operation 'div'"):
        poly_arith(x, x, "div")
    with pytest.raises(RingMismatchError):
        poly_arith(x, P3.gen(0), "add")

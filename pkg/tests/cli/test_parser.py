import pytest

from src.cli import CommandKind, SessionOptions, parse_session
from src.errors import ParseError, SemanticError

EXAMPLE = "ring A = F(32003)[x,y] / (x^2, x*y); filtration M = adic(maxideal(A)); certify buchsbaum M;"

FULL_SESSION = """
# embedded point
ring A = F(32003)[x,y] / (x^2, x*y);
ideal Q = (y);
ideal m = maxideal(A);
filtration M = adic(m);
filtration T = table(maxideal(A), (x^2, x*y, y^2); Q=Q, r=1);
filtration R = rr((y^2, x*y));
certify buchsbaum M;
hilbert T 8;
intersect M 1;
invariant A Q;
dseq A (y);
corso M;
cohomology A;
"""


def test_parse_example_session():
    """Test that the one-line example yields one ring, one filtration and one command."""
    session = parse_session(EXAMPLE)
    assert len(session.rings) == 1
    assert len(session.filtrations) == 1
    assert len(session.commands) == 1
    assert session.commands[0].kind == CommandKind.CERTIFY
    assert session.rings[0].relations == ["x^2", "x*y"]


def test_parse_empty_session():
    """Test that empty input is an empty session."""
    session = parse_session("")
    assert session.statements == []
    assert session.commands == []


def test_parse_comments_only():
    """Test that comments and whitespace are ignored."""
    assert parse_session("# nothing here\n\n   ").statements == []


def test_unknown_variable_is_semantic_error():
    """Test that a variable outside the ring is rejected with its location."""
    with pytest.raises(SemanticError, match="unknown variable y") as info:
        parse_session("ring A = F(7)[x];\nideal I = (y);")
    assert (info.value.line, info.value.column) == (2, 12)


def test_syntax_error_location():
    """Test that a missing semicolon is reported at the next token."""
    with pytest.raises(ParseError, match="expected ';'") as info:
        parse_session("ring A = F(7)[x]\nideal I = (x);")
    assert (info.value.line, info.value.column) == (2, 1)
    assert info.value.token == "ideal"


def test_round_trip():
    """Test that printing and re-parsing a session gives an equal session."""
    session = parse_session(FULL_SESSION)
    text = session.to_text()
    again = parse_session(text)
    assert again == session
    assert again.to_text() == text


def test_canonical_printing():
    """Test that polynomials are printed canonically."""
    session = parse_session("ring A = F(7)[x,y] / (y*x + 8*x^2);")
    assert session.to_text() == "ring A = F(7)[x,y] / (x^2 + x*y);\n"


def test_duplicate_declaration():
    """Test that a name cannot be declared twice."""
    with pytest.raises(SemanticError, match="duplicate ring A"):
        parse_session("ring A = F(7)[x]; ring A = F(7)[y];")


def test_forward_reference():
    """Test that names must be declared before use."""
    with pytest.raises(SemanticError, match="unknown filtration M"):
        parse_session("ring A = F(7)[x]; certify buchsbaum M; filtration M = adic(maxideal(A));")


def test_unknown_ring():
    """Test that maxideal of an undeclared ring is rejected."""
    with pytest.raises(SemanticError, match="unknown ring B"):
        parse_session("ring A = F(7)[x]; ideal m = maxideal(B);")


def test_generators_need_a_ring():
    """Test that a generator list before any ring is rejected."""
    with pytest.raises(SemanticError, match="no ring declared"):
        parse_session("ideal I = (x);")


def test_ring_mismatch():
    """Test that an ideal over another ring cannot be used."""
    text = "ring A = F(7)[x,y]; ring B = F(7)[x,y]; ideal I = (x); invariant A I;"
    with pytest.raises(SemanticError, match="ideal over B used where an ideal over A"):
        parse_session(text)


def test_hilbert_needs_positive_integer():
    """Test the arity check of hilbert."""
    with pytest.raises(SemanticError, match="positive integer"):
        parse_session("ring A = F(7)[x]; filtration M = adic(maxideal(A)); hilbert M 0;")


def test_unknown_command():
    """Test that an unknown keyword is a syntax error."""
    with pytest.raises(ParseError, match="expected a declaration or command"):
        parse_session("ring A = F(7)[x]; plot A;")


def test_bad_modulus():
    """Test that a composite modulus is rejected."""
    with pytest.raises(SemanticError):
        parse_session("ring A = F(8)[x];")


def test_prime_override():
    """Test that a prime option replaces declared primes."""
    session = parse_session(EXAMPLE, SessionOptions(prime=7))
    assert session.rings[0].prime == 7
    assert session.options.prime == 7


def test_locations_ignored_by_equality():
    """Test that the same statements on different lines compare equal."""
    assert parse_session(EXAMPLE) == parse_session("\n\n" + EXAMPLE.replace("; ", ";\n"))

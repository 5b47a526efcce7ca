"""
Parser for session files.

    session    := stmt*
    stmt       := ringdecl | idealdecl | filtdecl | cmd
    ringdecl   := "ring" ID "=" "F" "(" INT ")" "[" IDlist "]" ["/" "(" polylist ")"] ";"
    idealdecl  := "ideal" ID "=" ("(" polylist ")" | "maxideal" "(" ID ")") ";"
    filtdecl   := "filtration" ID "=" ( "adic" "(" idexpr ")"
                                      | "table" "(" idexpr ("," idexpr)* ";" "Q" "=" idexpr "," "r" "=" INT ")"
                                      | "rr" "(" idexpr ")" ) ";"
    idexpr     := ID | "maxideal" "(" ID ")" | "(" polylist ")"
    cmd        := ( "certify" "buchsbaum" ID | "hilbert" ID INT | "intersect" ID INT
                  | "invariant" ID idexpr | "dseq" ID "(" polylist ")"
                  | "corso" ID | "cohomology" ID ) ";"

Generator lists without a ring of their own are read in the most recently
declared ring. Names live in one namespace per kind and must be declared
before use.
"""

from ..algebra.field import PrimeField
from ..algebra.parsing import Token, TokenKind, TokenStream, parse_polynomial
from ..algebra.polynomial import PolyRing
from ..errors import AlgebraError, SemanticError
from .session import (
    Command,
    CommandKind,
    FiltrationDecl,
    FiltrationSyntax,
    IdealDecl,
    IdealExpr,
    IdealExprKind,
    RingDecl,
    Session,
    SessionOptions,
)

RING_COMMANDS = {CommandKind.INVARIANT, CommandKind.DSEQ, CommandKind.COHOMOLOGY}


class SessionParser:
    """
    Recursive-descent parser with name resolution.

    Args:
        text: Session source.
        options: Command-line options; a prime here overrides every ring
            declaration.
    """

    def __init__(self, text: str, options: SessionOptions | None = None):
        self.stream = TokenStream.from_text(text)
        self.options = options or SessionOptions()
        self.rings: dict[str, PolyRing] = {}
        self.ideals: dict[str, str] = {}
        self.filtrations: dict[str, str] = {}
        self.current_ring: str | None = None

    def parse(self) -> Session:
        statements = []
        while not self.stream.at_end():
            statements.append(self._statement())
        return Session(statements=statements, options=self.options)

    def _statement(self) -> RingDecl | IdealDecl | FiltrationDecl | Command:
        token = self.stream.peek()
        if token.kind != TokenKind.ID:
            self.stream.fail("expected a declaration or command")
        if token.text == "ring":
            return self._ring_decl()
        if token.text == "ideal":
            return self._ideal_decl()
        if token.text == "filtration":
            return self._filtration_decl()
        return self._command()

    def _identifier(self) -> Token:
        return self.stream.expect_kind(TokenKind.ID)

    def _integer(self) -> int:
        return int(self.stream.expect_kind(TokenKind.INT).text)

    def _declare(self, table: dict, kind: str, token: Token) -> None:
        if token.text in table:
            raise SemanticError(
                f"duplicate {kind} {token.text}", token.line, token.column, token.text
            )

    def _ring_decl(self) -> RingDecl:
        start = self.stream.expect("ring")
        name = self._identifier()
        self._declare(self.rings, "ring", name)
        self.stream.expect("=")
        self.stream.expect("F")
        self.stream.expect("(")
        prime_token = self.stream.expect_kind(TokenKind.INT)
        self.stream.expect(")")
        prime = self.options.prime or int(prime_token.text)
        self.stream.expect("[")
        variables = [self._identifier().text]
        while self.stream.accept(","):
            variables.append(self._identifier().text)
        self.stream.expect("]")
        try:
            ring = PolyRing(PrimeField(prime), tuple(variables))
        except AlgebraError as error:
            raise SemanticError(
                str(error), prime_token.line, prime_token.column, prime_token.text
            ) from error
        relations: list[str] = []
        if self.stream.accept("/"):
            relations = self._polylist(ring)
        self.stream.expect(";")
        self.rings[name.text] = ring
        self.current_ring = name.text
        return RingDecl(
            name=name.text,
            prime=prime,
            variables=variables,
            relations=relations,
            line=start.line,
            column=start.column,
        )

    def _polylist(self, ring: PolyRing) -> list[str]:
        self.stream.expect("(")
        polys = [str(parse_polynomial(self.stream, ring))]
        while self.stream.accept(","):
            polys.append(str(parse_polynomial(self.stream, ring)))
        self.stream.expect(")")
        return polys

    def _ring_ref(self) -> Token:
        token = self._identifier()
        if token.text not in self.rings:
            raise SemanticError(f"unknown ring {token.text}", token.line, token.column, token.text)
        return token

    def _context_ring(self, token: Token) -> str:
        if self.current_ring is None:
            raise SemanticError("no ring declared", token.line, token.column, token.text or None)
        return self.current_ring

    def _ideal_expr(self, ring_hint: str | None) -> IdealExpr:
        token = self.stream.peek()
        if self.stream.check("("):
            ring = ring_hint or self._context_ring(token)
            return IdealExpr(
                kind=IdealExprKind.GENERATORS,
                ring=ring,
                gens=self._polylist(self.rings[ring]),
                line=token.line,
                column=token.column,
            )
        if self.stream.check("maxideal") and self.stream.peek(1).text == "(":
            self.stream.next()
            self.stream.expect("(")
            ring_token = self._ring_ref()
            self.stream.expect(")")
            return IdealExpr(
                kind=IdealExprKind.MAXIDEAL,
                ring=ring_token.text,
                ref=ring_token.text,
                line=token.line,
                column=token.column,
            )
        name = self._identifier()
        if name.text not in self.ideals:
            raise SemanticError(f"unknown ideal {name.text}", name.line, name.column, name.text)
        return IdealExpr(
            kind=IdealExprKind.NAME,
            ring=self.ideals[name.text],
            ref=name.text,
            line=token.line,
            column=token.column,
        )

    def _same_ring(self, expr: IdealExpr, ring: str) -> None:
        if expr.ring != ring:
            raise SemanticError(
                f"ideal over {expr.ring} used where an ideal over {ring} is needed",
                expr.line,
                expr.column,
                expr.to_text(),
            )

    def _ideal_decl(self) -> IdealDecl:
        start = self.stream.expect("ideal")
        name = self._identifier()
        self._declare(self.ideals, "ideal", name)
        self.stream.expect("=")
        if not (self.stream.check("(") or self.stream.check("maxideal")):
            self.stream.fail("expected a generator list or maxideal(...)")
        expr = self._ideal_expr(None)
        self.stream.expect(";")
        self.ideals[name.text] = expr.ring
        return IdealDecl(name=name.text, expr=expr, line=start.line, column=start.column)

    def _filtration_decl(self) -> FiltrationDecl:
        start = self.stream.expect("filtration")
        name = self._identifier()
        self._declare(self.filtrations, "filtration", name)
        self.stream.expect("=")
        head = self._identifier()
        try:
            syntax = FiltrationSyntax(head.text)
        except ValueError:
            self.stream.fail("expected adic, table or rr", head)
        self.stream.expect("(")
        first = self._ideal_expr(None)
        ideals = [first]
        reduction, r = None, None
        if syntax == FiltrationSyntax.TABLE:
            while self.stream.accept(","):
                ideals.append(self._ideal_expr(first.ring))
            self.stream.expect(";")
            self.stream.expect("Q")
            self.stream.expect("=")
            reduction = self._ideal_expr(first.ring)
            self.stream.expect(",")
            self.stream.expect("r")
            self.stream.expect("=")
            r = self._integer()
            for expr in [*ideals, reduction]:
                self._same_ring(expr, first.ring)
        self.stream.expect(")")
        self.stream.expect(";")
        self.filtrations[name.text] = first.ring
        return FiltrationDecl(
            name=name.text,
            ring=first.ring,
            syntax=syntax,
            ideals=ideals,
            reduction=reduction,
            r=r,
            line=start.line,
            column=start.column,
        )

    def _target(self, kind: CommandKind) -> Token:
        token = self._identifier()
        table, noun = (
            (self.rings, "ring") if kind in RING_COMMANDS else (self.filtrations, "filtration")
        )
        if token.text not in table:
            raise SemanticError(f"unknown {noun} {token.text}", token.line, token.column, token.text)
        return token

    def _command(self) -> Command:
        start = self.stream.next()
        try:
            kind = CommandKind(start.text)
        except ValueError:
            self.stream.fail("expected a declaration or command", start)
        if kind == CommandKind.CERTIFY:
            self.stream.expect("buchsbaum")
        target = self._target(kind)
        number, ideal, polys = None, None, []
        if kind in (CommandKind.HILBERT, CommandKind.INTERSECT):
            token = self.stream.peek()
            number = self._integer()
            if number < 1:
                raise SemanticError(
                    f"{kind.value} needs a positive integer", token.line, token.column, token.text
                )
        elif kind == CommandKind.INVARIANT:
            ideal = self._ideal_expr(target.text)
            self._same_ring(ideal, target.text)
        elif kind == CommandKind.DSEQ:
            polys = self._polylist(self.rings[target.text])
        self.stream.expect(";")
        return Command(
            kind=kind,
            target=target.text,
            number=number,
            ideal=ideal,
            polys=polys,
            line=start.line,
            column=start.column,
        )


def parse_session(text: str, options: SessionOptions | None = None) -> Session:
    """
    Parse session source into a Session.

    Raises:
        ParseError: On lexical or syntactic errors.
        SemanticError: On unknown or duplicate names, unknown variables and
            bad moduli.
    """
    return SessionParser(text, options).parse()

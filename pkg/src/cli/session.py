"""
Session syntax tree.

Polynomials are stored in canonical text, so printing a session and parsing
it back yields an equal session. Source locations are excluded from
serialization and from equality.
"""

from enum import Enum
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field


class Node(BaseModel):
    line: int = Field(default=0, exclude=True)
    column: int = Field(default=0, exclude=True)

    model_config = ConfigDict(frozen=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Node):
            return NotImplemented
        return type(self) is type(other) and self.model_dump() == other.model_dump()

    def __hash__(self) -> int:
        return hash(self.model_dump_json())

    @property
    def location(self) -> str:
        return f"{self.line}:{self.column}"


class IdealExprKind(str, Enum):
    NAME = "name"
    MAXIDEAL = "maxideal"
    GENERATORS = "generators"


class IdealExpr(Node):
    """A named ideal, maxideal(R) or an explicit generator list, over `ring`."""

    kind: IdealExprKind
    ring: str
    ref: str | None = None
    gens: list[str] = Field(default_factory=list)

    def to_text(self) -> str:
        if self.kind == IdealExprKind.NAME:
            return str(self.ref)
        if self.kind == IdealExprKind.MAXIDEAL:
            return f"maxideal({self.ref})"
        return "(" + ", ".join(self.gens) + ")"


class RingDecl(Node):
    tag: Literal["ring"] = "ring"
    name: str
    prime: int
    variables: list[str]
    relations: list[str] = Field(default_factory=list)

    def to_text(self) -> str:
        text = f"ring {self.name} = F({self.prime})[{','.join(self.variables)}]"
        if self.relations:
            text += " / (" + ", ".join(self.relations) + ")"
        return text + ";"


class IdealDecl(Node):
    tag: Literal["ideal"] = "ideal"
    name: str
    expr: IdealExpr

    @property
    def ring(self) -> str:
        return self.expr.ring

    def to_text(self) -> str:
        return f"ideal {self.name} = {self.expr.to_text()};"


class FiltrationSyntax(str, Enum):
    ADIC = "adic"
    TABLE = "table"
    RR = "rr"


class FiltrationDecl(Node):
    tag: Literal["filtration"] = "filtration"
    name: str
    ring: str
    syntax: FiltrationSyntax
    ideals: list[IdealExpr]
    reduction: IdealExpr | None = None
    r: int | None = None

    def to_text(self) -> str:
        head = f"filtration {self.name} = {self.syntax.value}("
        if self.syntax == FiltrationSyntax.TABLE:
            listed = ", ".join(expr.to_text() for expr in self.ideals)
            assert self.reduction is not None
            return f"{head}{listed}; Q={self.reduction.to_text()}, r={self.r});"
        return f"{head}{self.ideals[0].to_text()});"


class CommandKind(str, Enum):
    CERTIFY = "certify"
    HILBERT = "hilbert"
    INVARIANT = "invariant"
    DSEQ = "dseq"
    CORSO = "corso"
    COHOMOLOGY = "cohomology"
    INTERSECT = "intersect"


FILTRATION_COMMANDS = {
    CommandKind.CERTIFY,
    CommandKind.HILBERT,
    CommandKind.CORSO,
    CommandKind.INTERSECT,
}


class Command(Node):
    tag: Literal["command"] = "command"
    kind: CommandKind
    target: str
    number: int | None = None
    ideal: IdealExpr | None = None
    polys: list[str] = Field(default_factory=list)

    def to_text(self) -> str:
        match self.kind:
            case CommandKind.CERTIFY:
                return f"certify buchsbaum {self.target};"
            case CommandKind.HILBERT | CommandKind.INTERSECT:
                return f"{self.kind.value} {self.target} {self.number};"
            case CommandKind.INVARIANT:
                assert self.ideal is not None
                return f"invariant {self.target} {self.ideal.to_text()};"
            case CommandKind.DSEQ:
                return f"dseq {self.target} (" + ", ".join(self.polys) + ");"
            case _:
                return f"{self.kind.value} {self.target};"


Statement = Annotated[
    Union[RingDecl, IdealDecl, FiltrationDecl, Command], Field(discriminator="tag")
]


class SessionOptions(BaseModel):
    """Run options given on the command line."""

    prime: int | None = Field(None, ge=2)
    trials: int | None = Field(None, ge=1)
    horizon: int | None = Field(None, ge=4)
    seed: int | None = None
    usd_bound: int | None = Field(None, ge=1)

    model_config = ConfigDict(frozen=True)


class Session(BaseModel):
    """Declarations and commands in source order."""

    statements: list[Statement] = Field(default_factory=list)
    options: SessionOptions = Field(default_factory=SessionOptions)

    model_config = ConfigDict(frozen=True)

    @property
    def rings(self) -> list[RingDecl]:
        return [s for s in self.statements if isinstance(s, RingDecl)]

    @property
    def ideals(self) -> list[IdealDecl]:
        return [s for s in self.statements if isinstance(s, IdealDecl)]

    @property
    def filtrations(self) -> list[FiltrationDecl]:
        return [s for s in self.statements if isinstance(s, FiltrationDecl)]

    @property
    def commands(self) -> list[Command]:
        return [s for s in self.statements if isinstance(s, Command)]

    def to_text(self) -> str:
        """Canonical source, one statement per line."""
        return "".join(statement.to_text() + "\n" for statement in self.statements)

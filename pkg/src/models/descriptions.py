from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class RingDescription(BaseModel):
    """Serializable presentation of a quotient ring P/J."""

    name: str | None = None
    prime: int = Field(..., ge=2)
    variables: list[str]
    relations: list[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    def to_text(self) -> str:
        text = f"F({self.prime})[{','.join(self.variables)}]"
        if self.relations:
            text += " / (" + ", ".join(self.relations) + ")"
        return text


class FiltrationKind(str, Enum):
    ADIC = "adic"
    TABLE = "table"
    RATLIFF_RUSH = "ratliff_rush"
    QUOTIENT = "quotient"


class ReductionRecord(BaseModel):
    """A verified reduction Q = (a_1, ..., a_d) with reduction number r."""

    generators: list[str]
    r: int = Field(..., ge=0)
    verified_up_to: int = Field(..., ge=0)
    trials_used: int = Field(default=1, ge=0)


class FiltrationDescription(BaseModel):
    """
    Enough text to rebuild a filtration.

    `ideals` holds the generating ideal for adic and Ratliff-Rush
    filtrations, and I_1..I_s for tables. Quotient filtrations also record
    the parent description and the sliced element.
    """

    kind: FiltrationKind
    ideals: list[list[str]]
    table_reduction: list[str] | None = None
    claimed_r: int | None = None
    slice_element: str | None = None
    slice_exponent: int | None = None
    parent: "FiltrationDescription | None" = None
    parent_ring: RingDescription | None = None

    model_config = ConfigDict(use_enum_values=True)

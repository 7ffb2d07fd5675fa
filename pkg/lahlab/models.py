"""Data models for lahlab."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, List, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator

from .exact import to_rational


class TriangleKind(str, Enum):
    LAH = "lah"
    STIRLING_FIRST = "stirling1"
    STIRLING_SECOND = "stirling2"


class OutputFormat(str, Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"


# Fractions coming in as ints or "p/q" strings are normalised on construction.
RationalField = Annotated[Fraction, BeforeValidator(to_rational)]


class DerivSpec(BaseModel):
    """Parameters of D^n [x^lambda * exp(c * x^p)]."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=0)
    c: RationalField = Fraction(1)
    p: RationalField = Fraction(-1)
    lam: RationalField = Fraction(0)

    @property
    def a(self) -> Fraction:
        """Parameter of the x^lambda * exp(-a/x) form (c = -a)."""
        return -self.c


class DerivClosedForm(BaseModel):
    """exp(c x^p) * x^(lambda - n) * sum_k coeffs[k] * x^(p k).

    ``coeffs`` always has n + 1 entries; zeros are kept.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: DerivSpec
    coeffs: Tuple[RationalField, ...]

    @model_validator(mode="after")
    def _check_length(self) -> "DerivClosedForm":
        if len(self.coeffs) != self.spec.n + 1:
            raise ValueError(
                f"expected {self.spec.n + 1} coefficients, got {len(self.coeffs)}"
            )
        return self


class IdentityReport(BaseModel):
    """Outcome of one identity check, with both sides serialised exactly."""

    model_config = ConfigDict(frozen=True)

    identity: str
    params: List[str] = Field(default_factory=list)
    status: Status
    lhs: str
    rhs: str

    @model_validator(mode="after")
    def _status_matches_sides(self) -> "IdentityReport":
        if (self.status is Status.PASS) != (self.lhs == self.rhs):
            raise ValueError("status must be pass exactly when lhs equals rhs")
        return self

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @classmethod
    def compare(cls, identity: str, params: Tuple[Any, ...], lhs: Any, rhs: Any) -> "IdentityReport":
        from .formatting import format_exact

        lhs_text, rhs_text = format_exact(lhs), format_exact(rhs)
        return cls(
            identity=identity,
            params=[format_exact(p) for p in params],
            status=Status.PASS if lhs_text == rhs_text else Status.FAIL,
            lhs=lhs_text,
            rhs=rhs_text,
        )

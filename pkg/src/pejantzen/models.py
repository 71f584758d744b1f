"""Shared enums, rational formatting, and the exception hierarchy."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction


class Basis(Enum):
    VERMA_G0 = "verma_g0"
    SIMPLE_G0 = "simple_g0"
    VERMA_SUPER = "verma_super"
    KAC_SIMPLE = "kac_simple"


class Typicality(Enum):
    TYPICAL = "typical"
    ATYPICAL = "atypical"


class Dominance(Enum):
    DOMINANT = "dominant"
    ANTI_DOMINANT = "anti_dominant"
    BOTH = "both"
    NEITHER = "neither"


class Finiteness(Enum):
    FINITE = "finite"
    FREE = "free"


class StepKind(Enum):
    ODD_REFLECTION = "odd_reflection"
    INCLUSION = "inclusion"


class ReportStatus(Enum):
    ZERO = "zero"
    SEMISIMPLE = "semisimple"
    NONSEMISIMPLE = "nonsemisimple"
    UNSUPPORTED = "unsupported"


class ConstituentForm(Enum):
    SIMPLE_SUPER = "simple_super"  # L~(mu)
    KAC_SIMPLE = "kac_simple"      # K(L(mu))


# ----- exceptions ----------------------------------------------------------


class PeError(Exception):
    """Base class for pejantzen errors."""


class InvalidArgumentError(PeError, ValueError):
    """Raised when an operation's precondition is violated."""


class RankMismatchError(PeError, ValueError):
    """Raised when operands live in different ranks."""


class NonIntegralError(PeError, ValueError):
    """Raised when a weight (or a difference of weights) is not integral."""


class BasisMismatchError(PeError, ValueError):
    """Raised when Grothendieck classes over different bases are mixed."""


class UnsupportedError(PeError):
    """Raised for valid input outside the certified computational scope."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


# ----- rationals -----------------------------------------------------------


def format_rational(value: Fraction | int) -> str:
    """Canonical string for a rational: ``"3"``, ``"-1/2"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal into a Fraction.

    Raises ``InvalidArgumentError`` on anything else (decimals included, so
    that every accepted literal is exact).
    """
    raw = text.strip()
    if not raw:
        raise InvalidArgumentError("empty rational literal")
    if "." in raw or "e" in raw.lower():
        raise InvalidArgumentError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgumentError(f"not a rational literal: {text!r}") from exc

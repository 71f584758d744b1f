"""Weights of pe(n): the value type and its arithmetic.

A weight is a vector of exact rationals in the epsilon basis of h*, with the
form <eps_i, eps_j> = delta_ij. Even coroots coincide with their roots, so
pairings with even roots are plain coordinate differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable

from pejantzen.models import (
    Dominance,
    InvalidArgumentError,
    NonIntegralError,
    RankMismatchError,
    Typicality,
    format_rational,
    parse_rational,
)

if TYPE_CHECKING:
    from pejantzen.structure import RankContext
    from pejantzen.weyl import WeylElem


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def of(cls, *values: Fraction | int | str) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Weight":
        """eps_i (1-based)."""
        if not 1 <= i <= n:
            raise InvalidArgumentError(f"eps index {i} out of range 1..{n}")
        return cls(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Weight":
        """Parse comma-separated rational literals, e.g. ``"0,2"`` or ``"1/2,-3"``."""
        parts = [p for p in text.split(",")] if text.strip() else []
        coords = tuple(parse_rational(p) for p in parts)
        if n is not None and len(coords) != n:
            raise RankMismatchError(
                f"weight {text!r} has {len(coords)} coordinates, expected {n}"
            )
        return cls(coords)

    def _check(self, other: "Weight") -> None:
        if self.n != other.n:
            raise RankMismatchError(f"rank {self.n} weight combined with rank {other.n}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, k: Fraction | int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        """All pairwise coordinate differences are integers."""
        if not self.coords:
            return True
        first = self.coords[0]
        return all((a - first).denominator == 1 for a in self.coords)

    def has_integer_coords(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def to_list(self) -> list[str]:
        return [format_rational(a) for a in self.coords]

    def __str__(self) -> str:
        return "(" + ",".join(self.to_list()) + ")"


def inner(a: Weight, b: Weight) -> Fraction:
    a._check(b)
    return sum((x * y for x, y in zip(a.coords, b.coords)), Fraction(0))


def check_rank(ctx: "RankContext", *weights: Weight) -> None:
    for w in weights:
        if w.n != ctx.n:
            raise RankMismatchError(f"weight {w} has rank {w.n}, context has rank {ctx.n}")


def shifted(ctx: "RankContext", lam: Weight) -> Weight:
    """lam + rho."""
    check_rank(ctx, lam)
    return lam + ctx.rho


def unshifted(ctx: "RankContext", v: Iterable[Fraction | int]) -> Weight:
    """Inverse of :func:`shifted`: returns v - rho."""
    return Weight(tuple(v)) - ctx.rho


def dot_action(ctx: "RankContext", w: "WeylElem", lam: Weight) -> Weight:
    """w.lam = w(lam + rho) - rho."""
    check_rank(ctx, lam)
    if w.n != ctx.n:
        raise RankMismatchError(f"Weyl element of rank {w.n} acting in rank {ctx.n}")
    return unshifted(ctx, w.act(shifted(ctx, lam).coords))


def pairing(lam: Weight, alpha: Weight) -> Fraction:
    """<lam, alpha^vee> with alpha^vee = 2 alpha / <alpha, alpha>."""
    if alpha.is_zero():
        raise InvalidArgumentError("cannot pair with the zero root")
    return 2 * inner(lam, alpha) / inner(alpha, alpha)


@dataclass(frozen=True)
class TypicalityVerdict:
    verdict: Typicality
    value: Fraction  # T(lam) = T_+(lam) * T_-(lam)

    @property
    def typical(self) -> bool:
        return self.verdict is Typicality.TYPICAL

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "value": format_rational(self.value)}


def typicality(ctx: "RankContext", lam: Weight) -> TypicalityVerdict:
    """Evaluate T(lam); typical iff nonzero.

    T_pm(lam) = prod_{i<j} (lam_i - lam_j + j - i pm 1), so lam is atypical
    exactly when two entries of lam + rho differ by 1.
    """
    v = shifted(ctx, lam).coords
    diffs = [v[i] - v[j] for i in range(ctx.n) for j in range(i + 1, ctx.n)]
    t_plus = math.prod((d + 1 for d in diffs), start=Fraction(1))
    t_minus = math.prod((d - 1 for d in diffs), start=Fraction(1))
    value = t_plus * t_minus
    verdict = Typicality.TYPICAL if value != 0 else Typicality.ATYPICAL
    return TypicalityVerdict(verdict, value)


def is_typical(ctx: "RankContext", lam: Weight) -> bool:
    return typicality(ctx, lam).typical


def _even_pairings(ctx: "RankContext", lam: Weight) -> list[Fraction]:
    v = shifted(ctx, lam).coords
    return [v[i] - v[j] for i in range(ctx.n) for j in range(i + 1, ctx.n)]


def dominance_class(ctx: "RankContext", lam: Weight) -> Dominance:
    """Classify lam by the pairings <lam + rho, alpha^vee> over even positive roots."""
    pairings = _even_pairings(ctx, lam)
    has_pos = any(p.denominator == 1 and p > 0 for p in pairings)
    has_neg = any(p.denominator == 1 and p < 0 for p in pairings)
    if not has_pos and not has_neg:
        return Dominance.BOTH
    if not has_pos:
        return Dominance.ANTI_DOMINANT
    if not has_neg:
        return Dominance.DOMINANT
    return Dominance.NEITHER


def is_anti_dominant(ctx: "RankContext", lam: Weight) -> bool:
    return dominance_class(ctx, lam) in (Dominance.ANTI_DOMINANT, Dominance.BOTH)


def is_regular(ctx: "RankContext", lam: Weight) -> bool:
    """lam + rho has pairwise distinct entries (trivial dot stabilizer)."""
    v = shifted(ctx, lam).coords
    return len(set(v)) == len(v)


def hat(ctx: "RankContext", lam: Weight) -> Weight:
    """lam^ = -w0 lam: negate and reverse."""
    check_rank(ctx, lam)
    return Weight(tuple(-a for a in reversed(lam.coords)))


def hat_simple_root(ctx: "RankContext", i: int) -> int:
    """Index of the simple root -w0(eps_i - eps_{i+1})."""
    if not 1 <= i <= ctx.n - 1:
        raise InvalidArgumentError(f"simple root index {i} out of range 1..{ctx.n - 1}")
    return ctx.n - i


def order_leq(ctx: "RankContext", mu: Weight, lam: Weight) -> bool:
    """mu <= lam in the highest-weight order.

    lam - mu must lie in the nonnegative integer span of eps_i - eps_j (i<j)
    and eps_i + eps_j (i<=j). Odd generators add 2 to the coordinate sum;
    spending all of them on 2*eps_n disturbs no partial sum before the last,
    so the cone is cut out by an even nonnegative total and nonnegative
    partial sums d_1 + ... + d_k for k < n.
    """
    check_rank(ctx, mu, lam)
    d = (lam - mu).coords
    if any(c.denominator != 1 for c in d):
        raise NonIntegralError(f"{lam} - {mu} is not an integer vector")
    total = sum(d, Fraction(0))
    if total < 0 or total % 2 != 0:
        return False
    running = Fraction(0)
    for c in d[:-1]:
        running += c
        if running < 0:
            return False
    return True

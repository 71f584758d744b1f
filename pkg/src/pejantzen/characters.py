"""Grothendieck-group classes and the character computations built on them.

A class is a finite integer combination of basis symbols indexed by weights:
[M(mu)] (g0-Verma), [L(mu)] (g0-simple), [M~(mu)] (super Verma) or K(L(mu))
(Kac module of a g0-simple). Only same-basis classes can be combined;
changing basis is always an explicit call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from pejantzen.models import (
    Basis,
    BasisMismatchError,
    InvalidArgumentError,
    NonIntegralError,
    RankMismatchError,
)
from pejantzen.structure import RankContext, make_context
from pejantzen.weights import Weight, dot_action, shifted


@dataclass(frozen=True)
class GClass:
    basis: Basis
    terms: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        pruned = {w: int(c) for w, c in self.terms.items() if c != 0}
        ranks = {w.n for w in pruned}
        if len(ranks) > 1:
            raise RankMismatchError(f"class mixes weights of ranks {sorted(ranks)}")
        object.__setattr__(self, "terms", pruned)

    @classmethod
    def empty(cls, basis: Basis) -> "GClass":
        return cls(basis, {})

    @classmethod
    def single(cls, basis: Basis, weight: Weight, coefficient: int = 1) -> "GClass":
        return cls(basis, {weight: coefficient})

    @property
    def rank(self) -> int | None:
        for w in self.terms:
            return w.n
        return None

    def is_empty(self) -> bool:
        return not self.terms

    def coefficient(self, weight: Weight) -> int:
        return self.terms.get(weight, 0)

    def items(self) -> list[tuple[Weight, int]]:
        """Terms, highest weight first."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def mass(self) -> int:
        return sum(self.terms.values())

    def scale(self, k: int) -> "GClass":
        return GClass(self.basis, {w: k * c for w, c in self.terms.items()})

    def __add__(self, other: "GClass") -> "GClass":
        return combine(self, other)

    def __sub__(self, other: "GClass") -> "GClass":
        return combine(self, other, (1, -1))

    def to_list(self) -> list[dict]:
        return [
            {"weight": w.to_list(), "coefficient": c, "basis": self.basis.value}
            for w, c in self.items()
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        symbol = {
            Basis.VERMA_G0: "M",
            Basis.SIMPLE_G0: "L",
            Basis.VERMA_SUPER: "M~",
            Basis.KAC_SIMPLE: "K(L",
        }[self.basis]
        close = ")" if self.basis is Basis.KAC_SIMPLE else ""
        text = ""
        for k, (w, c) in enumerate(self.items()):
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            term = f"{mag}[{symbol}{w}{close}]"
            if k == 0:
                text = f"-{term}" if c < 0 else term
            else:
                text += f" - {term}" if c < 0 else f" + {term}"
        return text


def combine(a: GClass, b: GClass, scalars: tuple[int, int] = (1, 1)) -> GClass:
    """scalars[0]*a + scalars[1]*b."""
    if a.basis is not b.basis:
        raise BasisMismatchError(f"cannot combine {a.basis.value} and {b.basis.value} classes")
    if a.rank is not None and b.rank is not None and a.rank != b.rank:
        raise RankMismatchError(f"cannot combine rank {a.rank} and rank {b.rank} classes")
    ka, kb = scalars
    terms: dict[Weight, int] = {}
    for w, c in a.terms.items():
        terms[w] = terms.get(w, 0) + ka * c
    for w, c in b.terms.items():
        terms[w] = terms.get(w, 0) + kb * c
    return GClass(a.basis, terms)


def _require(cls: GClass, basis: Basis) -> None:
    if cls.basis is not basis:
        raise BasisMismatchError(f"expected a {basis.value} class, got {cls.basis.value}")


# ----- Kac modules ---------------------------------------------------------


@lru_cache(maxsize=None)
def _exterior_weights(ctx: RankContext) -> tuple[tuple[Weight, int], ...]:
    """Weights of Lambda(g_-1) with multiplicity: subset sums of the g_-1 roots."""
    acc: dict[Weight, int] = {Weight.zero(ctx.n): 1}
    for root in ctx.odd_roots_minus:
        step = dict(acc)
        for w, c in acc.items():
            moved = w + root
            step[moved] = step.get(moved, 0) + c
        acc = step
    return tuple(sorted(acc.items(), reverse=True))


def kac_expand(ctx: RankContext, cls: GClass) -> GClass:
    """ch K(N) = ch N * ch Lambda(g_-1) for a g0-Verma class N."""
    _require(cls, Basis.VERMA_G0)
    terms: dict[Weight, int] = {}
    exterior = _exterior_weights(ctx)
    for mu, c in cls.terms.items():
        if mu.n != ctx.n:
            raise RankMismatchError(f"weight {mu} has rank {mu.n}, context has rank {ctx.n}")
        for shift, mult in exterior:
            key = mu + shift
            terms[key] = terms.get(key, 0) + c * mult
    return GClass(Basis.VERMA_G0, terms)


def verma_super_expand(ctx: RankContext, lam: Weight) -> GClass:
    """[M~(lam)] in the g0-Verma basis; M~(lam) is K(M(lam))."""
    return kac_expand(ctx, GClass.single(Basis.VERMA_G0, lam))


def kac_simple_expand(ctx: RankContext, cls: GClass) -> GClass:
    """Expand a K(L(mu)) class into g0-Vermas; each mu must be regular integral."""
    from pejantzen.kl import orbit_decomposition, simple_in_verma

    _require(cls, Basis.KAC_SIMPLE)
    out = GClass.empty(Basis.VERMA_G0)
    for mu, c in cls.terms.items():
        base, w = orbit_decomposition(ctx, mu)
        out = out + kac_expand(ctx, simple_in_verma(base, w)).scale(c)
    return out


def twist(ctx: RankContext, cls: GClass, word: Sequence[int]) -> GClass:
    """Character of T_w applied to a g0-Verma class: [M(mu)] -> [M(w.mu)].

    ``word`` lists simple reflection indices; the twist by s_{i1}...s_{ik} is
    the composite of the simple twists, innermost last.
    """
    from pejantzen.weyl import from_reduced_word

    _require(cls, Basis.VERMA_G0)
    w = from_reduced_word(ctx.n, word)
    terms: dict[Weight, int] = {}
    for mu, c in cls.terms.items():
        key = dot_action(ctx, w, mu)
        terms[key] = terms.get(key, 0) + c
    return GClass(Basis.VERMA_G0, terms)


# ----- basis changes -------------------------------------------------------


_CONVERTIBLE = (Basis.VERMA_G0, Basis.SIMPLE_G0)


def convert(cls: GClass, target: Basis, base: Weight) -> GClass:
    """Change between the g0-Verma and g0-simple bases of the block of ``base``."""
    from pejantzen.kl import basis_matrix, orbit_element, simple_in_verma, verma_in_simple

    if cls.basis not in _CONVERTIBLE or target not in _CONVERTIBLE:
        raise BasisMismatchError(f"no conversion from {cls.basis.value} to {target.value}")
    ctx = make_context(base.n)
    basis_matrix(base)  # validates base
    elements = {mu: orbit_element(ctx, base, mu) for mu in cls.terms}
    if cls.basis is target:
        return cls
    expand = verma_in_simple if target is Basis.SIMPLE_G0 else simple_in_verma
    out = GClass.empty(target)
    for mu, c in cls.terms.items():
        out = out + expand(base, elements[mu]).scale(c)
    return out


# ----- weight multiplicities -----------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def kostant(v: tuple[int, ...]) -> int:
    """Number of ways to write v as a nonnegative combination of eps_i - eps_j, i < j."""
    if sum(v) != 0:
        return 0
    running = 0
    for c in v:
        running += c
        if running < 0:
            return 0
    if len(v) <= 1:
        return 1
    head, rest = v[0], v[1:]
    count = 0
    for spread in _compositions(head, len(rest)):
        count += kostant(tuple(r + a for r, a in zip(rest, spread)))
    return count


def weight_multiplicity(cls: GClass, nu: Weight) -> int:
    """dim of the nu weight space of a g0-Verma class."""
    _require(cls, Basis.VERMA_G0)
    total = 0
    for mu, c in cls.terms.items():
        d = (mu - nu).coords
        if any(a.denominator != 1 for a in d):
            raise NonIntegralError(f"{mu} - {nu} is not an integer vector")
        total += c * kostant(tuple(int(a) for a in d))
    return total


def _integer_offset(v: Weight, ref: Weight) -> tuple[int, ...]:
    d = (v - ref).coords
    if any(a.denominator != 1 for a in d):
        raise NonIntegralError(f"{v} - {ref} is not an integer vector")
    return tuple(int(a) for a in d)


def weight_multiplicities(cls: GClass, weights: Iterable[Weight]) -> dict[Weight, int]:
    """Batched :func:`weight_multiplicity` over many weights.

    Terms are stored as integer offsets from one reference weight and grouped
    by coordinate sum; K(mu - nu) vanishes unless the sums agree.
    """
    _require(cls, Basis.VERMA_G0)
    weights = list(weights)
    if not cls.terms:
        return {nu: 0 for nu in weights}
    ref = next(iter(cls.terms))
    by_sum: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for mu, c in cls.terms.items():
        off = _integer_offset(mu, ref)
        by_sum.setdefault(sum(off), []).append((off, c))
    out: dict[Weight, int] = {}
    for nu in weights:
        target = _integer_offset(nu, ref)
        total = 0
        for off, c in by_sum.get(sum(target), ()):
            total += c * kostant(tuple(a - b for a, b in zip(off, target)))
        out[nu] = total
    return out


def weyl_dimension(ctx: RankContext, lam: Weight) -> int:
    """dim L(lam) for dominant integral lam, by the Weyl dimension formula."""
    diffs = [lam.coords[k] - lam.coords[k + 1] for k in range(ctx.n - 1)]
    if any(d.denominator != 1 or d < 0 for d in diffs):
        raise InvalidArgumentError(f"{lam} is not dominant integral")
    v = shifted(ctx, lam).coords
    value = math.prod(
        (Fraction(v[i] - v[j], j - i) for i in range(ctx.n) for j in range(i + 1, ctx.n)),
        start=Fraction(1),
    )
    return int(value)

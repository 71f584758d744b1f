"""Blocks of the integral category O for pe(n).

Two integral weights lie in the same block exactly when the entries of
lam + rho agree as a multiset modulo 2: the dot action permutes those entries
and lam -> lam +- 2 eps_k moves one of them by 2, and together these moves
reach every weight with the same residues.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction

from pejantzen.models import InvalidArgumentError, NonIntegralError, format_rational
from pejantzen.structure import RankContext, distinguished_weight
from pejantzen.weights import Weight, shifted

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class BlockKey:
    n: int
    residues: tuple[Fraction, ...]  # entries of lam + rho mod 2, sorted
    coset: Fraction                 # common residue mod 1, in [0, 1)
    atypical: bool
    partial_index: int | None       # i with key = key(d^i), integer coset only

    @property
    def odd_count(self) -> int:
        """Number of residues congruent to coset + 1 mod 2."""
        return sum(1 for r in self.residues if r != self.coset)

    def integer_form(self) -> tuple["BlockKey", Fraction]:
        """(integer-coset key, k) with this key equal to that key shifted by k*omega_n."""
        if self.coset == 0:
            return self, Fraction(0)
        residues = tuple(sorted((r - self.coset) % 2 for r in self.residues))
        return _make_key(self.n, residues), self.coset

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "residues": [format_rational(r) for r in self.residues],
            "coset": format_rational(self.coset),
            "atypical": self.atypical,
            "partial_index": self.partial_index,
        }


def _odd_count_of_index(n: int, i: int) -> int:
    """Odd entries of d^i + rho: the first i share the parity of n+i-1, the rest run n-1-i..0."""
    return (n - i) // 2 + (i if (n + i) % 2 == 0 else 0)


def _make_key(n: int, residues: tuple[Fraction, ...]) -> BlockKey:
    coset = residues[0] % 1 if residues else Fraction(0)
    present = set(residues)
    atypical = any((r + 1) % 2 in present for r in present)
    partial_index = None
    if coset == 0:
        odd = sum(1 for r in residues if r == 1)
        for i in range(n + 1):
            if _odd_count_of_index(n, i) == odd:
                partial_index = i
                break
    return BlockKey(n, residues, coset, atypical, partial_index)


def block_key(ctx: RankContext, lam: Weight) -> BlockKey:
    if not lam.is_integral():
        raise NonIntegralError(f"{lam} is not integral")
    v = shifted(ctx, lam).coords
    return _make_key(ctx.n, tuple(sorted(a % 2 for a in v)))


def same_block(ctx: RankContext, lam: Weight, mu: Weight) -> bool:
    return block_key(ctx, lam) == block_key(ctx, mu)


def block_atypical(key: BlockKey) -> bool:
    return key.atypical


def key_for_index(ctx: RankContext, i: int, k: Fraction | int = 0) -> BlockKey:
    """Key of the block through d^i + k*omega_n."""
    return block_key(ctx, distinguished_weight(ctx, i) + ctx.omega.scale(Fraction(k)))


# ----- census --------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    key: BlockKey
    count: int
    representative: Weight  # smallest weight of the box in this block

    def to_dict(self) -> dict:
        return {
            "key": self.key.to_dict(),
            "count": self.count,
            "representative": self.representative.to_list(),
        }


def _census_chunk(ctx: RankContext, weights: list[Weight]) -> dict[BlockKey, tuple[int, Weight]]:
    found: dict[BlockKey, tuple[int, Weight]] = {}
    for lam in weights:
        key = block_key(ctx, lam)
        count, rep = found.get(key, (0, lam))
        found[key] = (count + 1, min(rep, lam))
    return found


def census(ctx: RankContext, box: int, workers: int = 4) -> list[CensusEntry]:
    """Group the integer weights of [-box, box]^n by block."""
    if box < 0:
        raise InvalidArgumentError(f"box must be nonnegative, got {box}")
    if workers < 1:
        raise InvalidArgumentError(f"workers must be positive, got {workers}")
    values = range(-box, box + 1)
    weights = [Weight(c) for c in itertools.product(values, repeat=ctx.n)]
    chunk_size = max(1, -(-len(weights) // workers))
    chunks = [weights[k:k + chunk_size] for k in range(0, len(weights), chunk_size)]
    logger.debug("census: %d weights in %d chunks", len(weights), len(chunks))

    merged: dict[BlockKey, tuple[int, Weight]] = {}
    if len(chunks) <= 1:
        partials = [_census_chunk(ctx, c) for c in chunks]
    else:
        partials = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_census_chunk, ctx, c) for c in chunks]
            for f in as_completed(futures):
                partials.append(f.result())
    for part in partials:
        for key, (count, rep) in part.items():
            total, best = merged.get(key, (0, rep))
            merged[key] = (total + count, min(best, rep))

    return [
        CensusEntry(key, count, rep)
        for key, (count, rep) in sorted(merged.items(), key=lambda kv: kv[0].odd_count)
    ]

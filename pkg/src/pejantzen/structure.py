"""Structural data of pe(n): roots, rho, omega_n and the weights d^i."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from pejantzen.models import InvalidArgumentError
from pejantzen.weights import Weight


@dataclass(frozen=True)
class RankContext:
    n: int
    rho: Weight
    omega: Weight
    even_positive_roots: tuple[Weight, ...]  # eps_i - eps_j, i < j
    odd_roots_plus: tuple[Weight, ...]       # eps_i + eps_j, i <= j (g_1)
    odd_roots_minus: tuple[Weight, ...]      # -(eps_i + eps_j), i < j (g_-1)

    def eps(self, i: int) -> Weight:
        return Weight.unit(self.n, i)

    def simple_root(self, i: int) -> Weight:
        """alpha_i = eps_i - eps_{i+1}."""
        if not 1 <= i <= self.n - 1:
            raise InvalidArgumentError(
                f"simple root index {i} out of range 1..{self.n - 1}"
            )
        return self.eps(i) - self.eps(i + 1)

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(self.simple_root(i) for i in range(1, self.n))

    def simple_root_index(self, alpha: Weight) -> int:
        """Inverse of :meth:`simple_root`; rejects anything outside Pi_0."""
        for i, root in enumerate(self.simple_roots, start=1):
            if root == alpha:
                return i
        raise InvalidArgumentError(f"{alpha} is not a simple even root")


@lru_cache(maxsize=None)
def make_context(n: int) -> RankContext:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"rank must be a positive integer, got {n!r}")

    def eps(i: int) -> Weight:
        return Weight.unit(n, i)

    pairs_lt = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pairs_le = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return RankContext(
        n=n,
        rho=Weight(tuple(n - k for k in range(1, n + 1))),
        omega=Weight((1,) * n),
        even_positive_roots=tuple(eps(i) - eps(j) for i, j in pairs_lt),
        odd_roots_plus=tuple(eps(i) + eps(j) for i, j in pairs_le),
        odd_roots_minus=tuple(-(eps(i) + eps(j)) for i, j in pairs_lt),
    )


def distinguished_weight(ctx: RankContext, i: int) -> Weight:
    """d^i = i eps_1 + (i-1) eps_2 + ... + eps_i."""
    if not isinstance(i, int) or not 0 <= i <= ctx.n:
        raise InvalidArgumentError(f"index {i!r} out of range 0..{ctx.n}")
    return Weight(tuple(max(i - k, 0) for k in range(ctx.n)))

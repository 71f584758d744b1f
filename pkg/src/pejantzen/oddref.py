"""Odd reflections along the fixed chain of Borel subalgebras from b^r to b.

The chain visits the roots eps_p + eps_q in the order q = 1..n, p = 1..q:
2eps_1, eps_1+eps_2, 2eps_2, eps_1+eps_3, ... For p != q the step is an odd
reflection and the highest weight of a simple module moves by the root exactly
when its p-th and q-th coordinates differ; for p = q the step is an inclusion
of Borel subalgebras and the highest weight is unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from pejantzen.models import StepKind
from pejantzen.structure import RankContext
from pejantzen.weights import Weight, check_rank


@dataclass(frozen=True)
class ChainStep:
    alpha: Weight
    kind: StepKind
    p: int
    q: int


@dataclass(frozen=True)
class TraceStep:
    alpha: Weight
    kind: StepKind
    weight: Weight  # highest weight after this step
    fired: bool

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_list(),
            "kind": self.kind.value,
            "weight": self.weight.to_list(),
        }


@dataclass(frozen=True)
class OddReflectionTrace:
    start: Weight
    end: Weight
    steps: tuple[TraceStep, ...]

    def to_dict(self) -> dict:
        return {
            "start": self.start.to_list(),
            "end": self.end.to_list(),
            "steps": [s.to_dict() for s in self.steps],
        }


def borel_chain(ctx: RankContext) -> list[ChainStep]:
    chain = []
    for q in range(1, ctx.n + 1):
        for p in range(1, q + 1):
            kind = StepKind.INCLUSION if p == q else StepKind.ODD_REFLECTION
            chain.append(ChainStep(ctx.eps(p) + ctx.eps(q), kind, p, q))
    return chain


def br_to_b(ctx: RankContext, lam: Weight) -> tuple[Weight, OddReflectionTrace]:
    """Highest weight with respect to b of the simple module with b^r-highest weight lam."""
    check_rank(ctx, lam)
    current = lam
    steps = []
    for step in borel_chain(ctx):
        c = current.coords
        fired = step.kind is StepKind.ODD_REFLECTION and c[step.p - 1] != c[step.q - 1]
        if fired:
            current = current + step.alpha
        steps.append(TraceStep(step.alpha, step.kind, current, fired))
    return current, OddReflectionTrace(lam, current, tuple(steps))


def b_to_br(ctx: RankContext, nu: Weight) -> Weight:
    """Inverse of :func:`br_to_b`: run the chain backwards."""
    check_rank(ctx, nu)
    current = nu
    for step in reversed(borel_chain(ctx)):
        c = current.coords
        if step.kind is StepKind.ODD_REFLECTION and c[step.p - 1] != c[step.q - 1]:
            current = current - step.alpha
    return current


def socle_of_kac(ctx: RankContext, mu: Weight) -> Weight:
    """b-highest weight of the simple socle of K(L(mu)).

    The socle has b^r-highest weight mu - (n-1) omega_n.
    """
    shifted_mu = mu - ctx.omega.scale(ctx.n - 1)
    return br_to_b(ctx, shifted_mu)[0]

from __future__ import annotations

import random
from itertools import combinations

import pytest

from pejantzen.models import StepKind
from pejantzen.oddref import b_to_br, borel_chain, br_to_b, socle_of_kac
from pejantzen.structure import make_context
from pejantzen.weights import Weight
from tests.helpers import w


def test_chain_rank_two() -> None:
    """2eps_1, eps_1+eps_2, 2eps_2."""
    chain = borel_chain(make_context(2))
    assert [(s.alpha, s.kind) for s in chain] == [
        (w(2, 0), StepKind.INCLUSION),
        (w(1, 1), StepKind.ODD_REFLECTION),
        (w(0, 2), StepKind.INCLUSION),
    ]


def test_chain_rank_one_and_three() -> None:
    """n=1 is a single inclusion; n=3 ends with eps_2+eps_3 then 2eps_3."""
    assert [(s.alpha, s.kind) for s in borel_chain(make_context(1))] == [(w(2), StepKind.INCLUSION)]
    chain = borel_chain(make_context(3))
    assert len(chain) == 6
    assert [(s.alpha, s.kind) for s in chain[-2:]] == [
        (w(0, 1, 1), StepKind.ODD_REFLECTION),
        (w(0, 0, 2), StepKind.INCLUSION),
    ]


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_shape(n: int) -> None:
    """n(n+1)/2 steps, odd exactly off the diagonal, each eps_p+eps_q once."""
    chain = borel_chain(make_context(n))
    assert len(chain) == n * (n + 1) // 2
    assert {(s.p, s.q) for s in chain} == {(p, q) for q in range(1, n + 1) for p in range(1, q + 1)}
    for s in chain:
        assert (s.kind is StepKind.ODD_REFLECTION) == (s.p != s.q)


def test_br_to_b_examples() -> None:
    """(0,0,1) -> (1,1,3), (a,a) fixed, (0,1) -> (1,2)."""
    assert br_to_b(make_context(3), w(0, 0, 1))[0] == w(1, 1, 3)
    ctx = make_context(2)
    assert br_to_b(ctx, w(5, 5))[0] == w(5, 5)
    assert br_to_b(ctx, w(0, 1))[0] == w(1, 2)


def test_b_to_br_examples() -> None:
    """Inverse of the rank two examples."""
    ctx = make_context(2)
    assert b_to_br(ctx, w(1, 2)) == w(0, 1)
    assert b_to_br(ctx, w(-3, -3)) == w(-3, -3)


def test_trace_steps() -> None:
    """Each step moves the weight by zero or by its root."""
    ctx = make_context(3)
    lam = w(0, 0, 1)
    end, trace = br_to_b(ctx, lam)
    assert trace.start == lam
    assert trace.end == end
    assert len(trace.steps) == 6
    previous = lam
    for step in trace.steps:
        moved = step.weight - previous
        assert moved == (step.alpha if step.fired else Weight.zero(3))
        if step.kind is StepKind.INCLUSION:
            assert not step.fired
        previous = step.weight
    assert previous == end


def test_trace_to_dict() -> None:
    """Traces serialize as lists of {alpha, kind, weight}."""
    _, trace = br_to_b(make_context(2), w(0, 1))
    assert trace.to_dict() == {
        "start": ["0", "1"],
        "end": ["1", "2"],
        "steps": [
            {"alpha": ["2", "0"], "kind": "inclusion", "weight": ["0", "1"]},
            {"alpha": ["1", "1"], "kind": "odd_reflection", "weight": ["1", "2"]},
            {"alpha": ["0", "2"], "kind": "inclusion", "weight": ["1", "2"]},
        ],
    }


def test_roundtrip_random() -> None:
    """b_to_br undoes br_to_b."""
    rng = random.Random(3)
    for n in range(1, 6):
        ctx = make_context(n)
        for _ in range(200):
            lam = Weight(tuple(rng.randint(-6, 6) for _ in range(n)))
            assert b_to_br(ctx, br_to_b(ctx, lam)[0]) == lam


def test_total_shift_is_sum_of_distinct_odd_roots() -> None:
    """end - start uses each eps_p+eps_q (p<q) at most once."""
    rng = random.Random(5)
    ctx = make_context(4)
    subset_sums = set()
    pairs = list(combinations(range(1, 5), 2))
    for size in range(len(pairs) + 1):
        for chosen in combinations(pairs, size):
            total = Weight.zero(4)
            for p, q in chosen:
                total = total + ctx.eps(p) + ctx.eps(q)
            subset_sums.add(total)
    for _ in range(100):
        lam = Weight(tuple(rng.randint(-3, 3) for _ in range(4)))
        end, _ = br_to_b(ctx, lam)
        assert end - lam in subset_sums


@pytest.mark.parametrize("n", range(2, 7))
def test_equal_then_increasing_family(n: int) -> None:
    """lam_1 = lam_2 < lam_3 < ... < lam_n maps to lam + (n-1)omega - eps_1 - eps_2."""
    ctx = make_context(n)
    for tail in combinations(range(-3, 4), n - 1):
        lam = Weight((tail[0],) + tail)
        expected = lam + ctx.omega.scale(n - 1) - ctx.eps(1) - ctx.eps(2)
        assert br_to_b(ctx, lam)[0] == expected


def test_socle_of_kac_examples() -> None:
    """soc K(L(omega_2)) = L~(0); the n=3 witness socle; inert equal coordinates."""
    ctx = make_context(2)
    assert socle_of_kac(ctx, w(1, 1)) == w(0, 0)
    assert socle_of_kac(ctx, w(-2, -2) + ctx.omega) == w(-2, -2)
    assert socle_of_kac(make_context(3), w(-1, -1, 2)) == w(-2, -2, 2)

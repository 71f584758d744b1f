from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pejantzen.models import (
    Dominance,
    InvalidArgumentError,
    NonIntegralError,
    RankMismatchError,
    Typicality,
)
from pejantzen.structure import distinguished_weight, make_context
from pejantzen.weights import (
    Weight,
    dominance_class,
    dot_action,
    hat,
    hat_simple_root,
    is_anti_dominant,
    order_leq,
    pairing,
    typicality,
)
from pejantzen.weyl import WeylElem, all_elements, from_reduced_word
from tests.helpers import in_highest_weight_cone, w


def test_parse_rationals() -> None:
    """Weights parse from comma-separated exact literals."""
    assert Weight.parse("1/2,-3") == Weight((Fraction(1, 2), Fraction(-3)))
    assert str(Weight.parse("-2,0,2", 3)) == "(-2,0,2)"


def test_parse_rejects_decimals_and_wrong_rank() -> None:
    """Decimal literals and length mismatches are input errors."""
    with pytest.raises(InvalidArgumentError):
        Weight.parse("0.5,1")
    with pytest.raises(RankMismatchError):
        Weight.parse("1,2,3", 2)


def test_dot_action_examples() -> None:
    """s_1 . (0,2) = omega_2; identity is trivial; the rank 3 swap of lam + rho."""
    s1 = WeylElem.simple(2, 1)
    assert dot_action(make_context(2), s1, w(0, 2)) == w(1, 1)
    ctx3 = make_context(3)
    assert dot_action(ctx3, WeylElem.identity(3), w(5, -1, 2)) == w(5, -1, 2)
    # lam + rho = (0,2,4) -> (2,0,4), minus rho
    assert dot_action(ctx3, WeylElem.simple(3, 1), w(-2, 1, 4)) == w(0, -1, 4)


def test_dot_action_rank_mismatch() -> None:
    """A rank 3 element cannot act in rank 2."""
    with pytest.raises(RankMismatchError):
        dot_action(make_context(2), WeylElem.identity(3), w(0, 0))


def test_dot_action_is_a_group_action() -> None:
    """dot(xy, lam) = dot(x, dot(y, lam))."""
    rng = random.Random(7)
    for n in range(2, 6):
        ctx = make_context(n)
        elems = all_elements(n)
        for _ in range(20):
            x, y = rng.choice(elems), rng.choice(elems)
            lam = Weight(tuple(rng.randint(-4, 4) for _ in range(n)))
            assert dot_action(ctx, x * y, lam) == dot_action(ctx, x, dot_action(ctx, y, lam))


def test_pairing() -> None:
    """<lam, alpha^vee> under the standard form."""
    alpha = w(1, -1)
    assert pairing(w(1, 2), alpha) == -1
    assert pairing(w(0, 0), alpha) == 0
    assert pairing(alpha, alpha) == 2
    assert pairing(w(1, 0), w(2, 0)) == 1
    with pytest.raises(InvalidArgumentError):
        pairing(w(1, 2), w(0, 0))


def test_typicality_examples() -> None:
    """2 eps_2 is atypical; d^{n-1} and (-2,1,4) are typical."""
    assert typicality(make_context(2), w(0, 2)).verdict is Typicality.ATYPICAL
    assert typicality(make_context(2), w(0, 2)).value == 0
    for n in range(2, 6):
        ctx = make_context(n)
        assert typicality(ctx, distinguished_weight(ctx, n - 1)).typical
    assert typicality(make_context(3), w(-2, 1, 4)).typical


def test_typicality_invariant_under_dot_action() -> None:
    """T(lam) only depends on the multiset of entries of lam + rho."""
    rng = random.Random(11)
    ctx = make_context(4)
    for _ in range(50):
        lam = Weight(tuple(rng.randint(-3, 3) for _ in range(4)))
        x = rng.choice(all_elements(4))
        assert typicality(ctx, lam) == typicality(ctx, dot_action(ctx, x, lam))


def test_dominance_examples() -> None:
    """anti-dominant, dominant and both."""
    assert dominance_class(make_context(3), w(-2, 0, 2)) is Dominance.ANTI_DOMINANT
    assert dominance_class(make_context(2), w(0, 0)) is Dominance.DOMINANT
    assert dominance_class(make_context(2), w("1/3", 0)) is Dominance.BOTH
    assert dominance_class(make_context(3), w(0, 2, 0)) is Dominance.NEITHER


def test_anti_dominance_matches_decreasing_pairs() -> None:
    """Anti-dominant iff lam + rho has no strictly decreasing integral pair."""
    rng = random.Random(3)
    ctx = make_context(4)
    for _ in range(200):
        lam = Weight(tuple(rng.randint(-3, 3) for _ in range(4)))
        v = (lam + ctx.rho).coords
        has_drop = any(v[i] > v[j] for i in range(4) for j in range(i + 1, 4))
        assert is_anti_dominant(ctx, lam) is (not has_drop)


def test_hat() -> None:
    """hat negates and reverses, and is an involution."""
    ctx = make_context(2)
    assert hat(ctx, w(3, -5)) == w(5, -3)
    assert hat(ctx, w(0, 0)) == w(0, 0)
    rng = random.Random(5)
    ctx4 = make_context(4)
    for _ in range(20):
        lam = Weight(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4)))
        assert hat(ctx4, hat(ctx4, lam)) == lam


def test_hat_simple_root() -> None:
    """-w0 sends alpha_i to alpha_{n-i}."""
    ctx = make_context(4)
    assert [hat_simple_root(ctx, i) for i in (1, 2, 3)] == [3, 2, 1]
    for i in (1, 2, 3):
        assert hat(ctx, ctx.simple_root(i)) == ctx.simple_root(hat_simple_root(ctx, i))


def test_order_leq_examples() -> None:
    """Differences eps_1 - eps_2 and eps_1 + eps_2 are generators; (-1,1) is not in the cone."""
    ctx = make_context(2)
    assert order_leq(ctx, w(0, 2), w(1, 1))
    assert order_leq(ctx, w(0, 0), w(1, 1))
    assert not order_leq(ctx, w(2, 0), w(1, 1))


def test_order_leq_rejects_non_integral_difference() -> None:
    """lam - mu must be an integer vector."""
    with pytest.raises(NonIntegralError):
        order_leq(make_context(2), w("1/2", 0), w(0, 0))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_order_leq_matches_cone_search(n: int) -> None:
    """The partial-sum criterion agrees with exhaustive cone search."""
    ctx = make_context(n)
    rng = random.Random(n)
    zero = Weight.zero(n)
    for _ in range(150):
        d = tuple(rng.randint(-3, 3) for _ in range(n))
        assert order_leq(ctx, zero, Weight(d)) is in_highest_weight_cone(d)


def test_order_leq_is_a_partial_order() -> None:
    """Reflexive, antisymmetric and transitive on sampled weights."""
    ctx = make_context(3)
    rng = random.Random(9)
    pts = [Weight(tuple(rng.randint(-2, 2) for _ in range(3))) for _ in range(25)]
    for a in pts:
        assert order_leq(ctx, a, a)
        for b in pts:
            if a != b and order_leq(ctx, a, b):
                assert not order_leq(ctx, b, a)
            for c in pts:
                if order_leq(ctx, a, b) and order_leq(ctx, b, c):
                    assert order_leq(ctx, a, c)


def test_from_word_dot_composes_with_weights() -> None:
    """Dot action of a word equals successive simple dot actions."""
    ctx = make_context(3)
    lam = w(4, -1, 0)
    step = lam
    for i in reversed([1, 2, 1]):
        step = dot_action(ctx, WeylElem.simple(3, i), step)
    assert dot_action(ctx, from_reduced_word(3, [1, 2, 1]), lam) == step

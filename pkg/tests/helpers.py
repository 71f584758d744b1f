from __future__ import annotations

import json
from collections import deque
from functools import lru_cache
from pathlib import Path

import sympy

from pejantzen.structure import make_context
from pejantzen.weights import Weight, dot_action
from pejantzen.weyl import WeylElem, all_elements

V = sympy.Symbol("v")


def w(*coords) -> Weight:
    return Weight.of(*coords)


def write_json(path: Path, data) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(data, f)


# ----- Hecke algebra oracle ------------------------------------------------
#
# Elements are dicts perm -> polynomial in v over the standard basis H_x,
# with H_s^2 = 1 + (v^-1 - v) H_s. The canonical basis element C_w equals
# H_w + sum_{x<w} h_{x,w} H_x with h_{x,w} in v Z[v], and
# h_{x,w} = v^{l(w)-l(x)} P_{x,w}(v^-2).


def _times_cs(elem: dict, i: int) -> dict:
    """elem * (H_s + v) for s = s_i."""
    out: dict = {}
    for x, c in elem.items():
        xs = x.right_mul_simple(i)
        factor = V if xs.length() > x.length() else 1 / V
        out[xs] = sympy.expand(out.get(xs, 0) + c)
        out[x] = sympy.expand(out.get(x, 0) + c * factor)
    return {k: c for k, c in out.items() if c != 0}


def _constant_term(expr) -> int:
    return int(sympy.Poly(expr, V).coeff_monomial(1)) if expr != 0 else 0


@lru_cache(maxsize=None)
def _canonical_basis(n: int) -> dict:
    basis: dict = {}
    for wel in all_elements(n):
        if wel.is_identity():
            basis[wel] = {wel: sympy.Integer(1)}
            continue
        i = next(k for k in range(1, n) if wel.has_right_descent(k))
        prod = _times_cs(basis[wel.right_mul_simple(i)], i)
        for z in sorted(prod, key=lambda e: e.length(), reverse=True):
            if z == wel or z not in prod:
                continue
            c = _constant_term(prod[z])
            if c:
                for x, coeff in basis[z].items():
                    prod[x] = sympy.expand(prod.get(x, 0) - c * coeff)
                prod = {k: v for k, v in prod.items() if v != 0}
        basis[wel] = prod
    return basis


def hecke_kl_coeffs(x: WeylElem, y: WeylElem) -> list[int]:
    """Coefficients of P_{x,y} in ascending powers of q, from the canonical basis."""
    h = _canonical_basis(y.n)[y].get(x, 0)
    if h == 0:
        return []
    gap = y.length() - x.length()
    poly = sympy.Poly(h, V)
    coeffs = [int(poly.coeff_monomial(V ** (gap - 2 * k))) for k in range(gap // 2 + 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# ----- combinatorial oracles -----------------------------------------------


def in_highest_weight_cone(d: tuple[int, ...]) -> bool:
    """Exhaustive search: is d a nonnegative combination of eps_i - eps_j (i<j), eps_i + eps_j (i<=j)?"""
    n = len(d)
    gens = []
    for i in range(n):
        for j in range(i, n):
            plus = [0] * n
            plus[i] += 1
            plus[j] += 1
            gens.append(tuple(plus))
            if i != j:
                minus = [0] * n
                minus[i] += 1
                minus[j] -= 1
                gens.append(tuple(minus))
    grade = tuple(n - k for k in range(n))  # every generator has positive grade

    @lru_cache(maxsize=None)
    def search(rest: tuple[int, ...]) -> bool:
        if all(c == 0 for c in rest):
            return True
        if sum(g * c for g, c in zip(grade, rest)) <= 0:
            return False
        return any(search(tuple(c - e for c, e in zip(rest, gen))) for gen in gens)

    return search(tuple(d))


def reachable_by_block_moves(lam: Weight, mu: Weight, radius: int) -> bool:
    """BFS over dot actions by simple reflections and +-2 eps_k inside [-radius, radius]^n."""
    n = lam.n
    ctx = make_context(n)
    simples = [WeylElem.simple(n, i) for i in range(1, n)]
    shifts = [ctx.eps(k).scale(2) for k in range(1, n + 1)]
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        if cur == mu:
            return True
        moves = [dot_action(ctx, s, cur) for s in simples]
        moves += [cur + e for e in shifts] + [cur - e for e in shifts]
        for nxt in moves:
            if nxt not in seen and all(abs(c) <= radius for c in nxt.coords):
                seen.add(nxt)
                queue.append(nxt)
    return False

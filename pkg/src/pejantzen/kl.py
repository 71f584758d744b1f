"""Kazhdan-Lusztig polynomials of S_n and Verma/simple basis changes.

P_{x,y} is computed by the classical recursion on l(y): for a right
descent s of y and v = ys,

    P_{x,y} = q^{1-c} P_{xs,v} + q^c P_{x,v}
              - sum_{z < v, zs < z} mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}

with c = 1 when xs < x. Results are memoized in one process-wide map keyed by
the permutation pair; :mod:`pejantzen.cache` persists it between runs.

For an anti-dominant regular integral base lam0 the g0-simple classes expand
as [L(w.lam0)] = sum_{x <= w} (-1)^{l(w)-l(x)} P_{x,w}(1) [M(x.lam0)].
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from pejantzen.characters import GClass
from pejantzen.models import Basis, InvalidArgumentError, UnsupportedError
from pejantzen.structure import RankContext, make_context
from pejantzen.weights import Weight, dot_action, shifted, unshifted
from pejantzen.weyl import WeylElem, all_elements, bruhat_leq, lower_interval

logger = logging.getLogger(__name__)

_Q = sympy.Symbol("q")


@dataclass(frozen=True)
class KLPoly:
    coeffs: tuple[int, ...]  # ascending powers of q, no trailing zeros

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def at(self, q: int) -> int:
        return sum(a * q**k for k, a in enumerate(self.coeffs))

    def shift(self, k: int) -> "KLPoly":
        """Multiply by q^k (k >= 0)."""
        if self.is_zero():
            return self
        return KLPoly((0,) * k + self.coeffs)

    def scale(self, m: int) -> "KLPoly":
        return KLPoly(tuple(m * a for a in self.coeffs))

    def __add__(self, other: "KLPoly") -> "KLPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return KLPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __sub__(self, other: "KLPoly") -> "KLPoly":
        return self + other.scale(-1)

    def as_expr(self) -> sympy.Expr:
        return sympy.Poly(list(reversed(self.coeffs)) or [0], _Q).as_expr()

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs), "expr": str(self.as_expr())}

    def __str__(self) -> str:
        return str(self.as_expr())


ZERO = KLPoly(())
ONE = KLPoly((1,))

_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], KLPoly] = {}
_memo_lock = threading.Lock()


def _lookup(x: WeylElem, y: WeylElem) -> KLPoly | None:
    with _memo_lock:
        return _memo.get((x.perm, y.perm))


def _store(x: WeylElem, y: WeylElem, p: KLPoly) -> None:
    with _memo_lock:
        _memo[(x.perm, y.perm)] = p


def kl_polynomial(x: WeylElem, y: WeylElem) -> KLPoly:
    """P_{x,y}; the zero polynomial when x is not below y."""
    x._check(y)
    cached = _lookup(x, y)
    if cached is not None:
        return cached
    result = _compute(x, y)
    _store(x, y, result)
    return result


def _compute(x: WeylElem, y: WeylElem) -> KLPoly:
    if x == y:
        return ONE
    if not bruhat_leq(x, y):
        return ZERO
    i = next(k for k in range(1, y.n) if y.has_right_descent(k))
    v = y.right_mul_simple(i)
    c = 1 if x.has_right_descent(i) else 0
    result = kl_polynomial(x.right_mul_simple(i), v).shift(1 - c) + kl_polynomial(x, v).shift(c)
    length_y = y.length()
    for z, m in _mu_list(v):
        if z.has_right_descent(i) and bruhat_leq(x, z):
            result = result - kl_polynomial(x, z).shift((length_y - z.length()) // 2).scale(m)
    return result


def mu(z: WeylElem, v: WeylElem) -> int:
    """Coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}; zero unless z < v with odd gap."""
    gap = v.length() - z.length()
    if gap <= 0 or gap % 2 == 0:
        return 0
    return kl_polynomial(z, v).coefficient((gap - 1) // 2)


@lru_cache(maxsize=4096)
def _mu_list(v: WeylElem) -> tuple[tuple[WeylElem, int], ...]:
    out = []
    for z in sorted(lower_interval(v)):
        m = mu(z, v)
        if m:
            out.append((z, m))
    return tuple(out)


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()
    _mu_list.cache_clear()


def memo_size() -> int:
    with _memo_lock:
        return len(_memo)


def memo_records() -> list[list]:
    """Memo contents as ``[n, x, y, coeffs]`` records, sorted."""
    with _memo_lock:
        items = sorted(_memo.items())
    return [[len(x), list(x), list(y), list(p.coeffs)] for (x, y), p in items]


def _plausible(x: WeylElem, y: WeylElem, poly: KLPoly) -> bool:
    """Zero off the Bruhat interval and 1 on the diagonal; otherwise constant
    term 1, nonnegative coefficients and degree below (l(y)-l(x))/2."""
    if not bruhat_leq(x, y):
        return poly.is_zero()
    if x == y:
        return poly == ONE
    if poly.coefficient(0) != 1 or any(a < 0 for a in poly.coeffs):
        return False
    return 2 * poly.degree < y.length() - x.length()


def load_memo_records(records: list) -> int:
    """Merge persisted records into the memo; malformed or impossible records are skipped."""
    loaded = 0
    for rec in records:
        try:
            n, x, y, coeffs = rec
            x_elem = WeylElem(tuple(int(a) for a in x))
            y_elem = WeylElem(tuple(int(a) for a in y))
            if x_elem.n != n or y_elem.n != n:
                continue
            poly = KLPoly(tuple(int(a) for a in coeffs))
        except (TypeError, ValueError):
            continue
        if not _plausible(x_elem, y_elem, poly):
            logger.debug("skipping KL record %s, %s: %s", x_elem, y_elem, poly.coeffs)
            continue
        _store(x_elem, y_elem, poly)
        loaded += 1
    logger.debug("loaded %d KL memo records", loaded)
    return loaded


# ----- basis changes -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BasisMatrix:
    """Verma/simple transition matrices of the regular block through base_point.

    Rows and columns follow ``elements`` (S_n sorted by length), so both
    matrices are upper unitriangular. Column w of ``simple_to_verma`` expands
    [L(w.base)] in Vermas; column w of ``verma_to_simple`` expands
    [M(w.base)] in simples.
    """

    base_point: Weight
    elements: tuple[WeylElem, ...]
    simple_to_verma: np.ndarray
    verma_to_simple: np.ndarray

    def index(self, w: WeylElem) -> int:
        return _element_index(w.n)[w]

    def entries(self, which: str = "simple_to_verma") -> dict[tuple[WeylElem, WeylElem], int]:
        matrix = getattr(self, which)
        return {
            (self.elements[r], self.elements[c]): int(matrix[r, c])
            for r, c in zip(*np.nonzero(matrix))
        }


@lru_cache(maxsize=None)
def _element_index(n: int) -> dict[WeylElem, int]:
    return {w: k for k, w in enumerate(all_elements(n))}


@lru_cache(maxsize=None)
def _matrices(n: int) -> tuple[np.ndarray, np.ndarray]:
    elems = all_elements(n)
    size = len(elems)
    s2v = np.zeros((size, size), dtype=np.int64)
    for c, w in enumerate(elems):
        lw = w.length()
        for r, x in enumerate(elems[: c + 1]):
            p = kl_polynomial(x, w)
            if not p.is_zero():
                s2v[r, c] = (-1) ** (lw - x.length()) * p.at(1)
    v2s = np.zeros_like(s2v)
    for r in range(size - 1, -1, -1):
        row = -(s2v[r, r + 1:] @ v2s[r + 1:, :])
        row[r] += 1
        v2s[r, :] = row
    logger.debug("built S_%d basis matrices (%d elements)", n, size)
    return s2v, v2s


def check_base(ctx: RankContext, base: Weight) -> None:
    """Require an anti-dominant regular integral base point."""
    if base.n != ctx.n:
        raise InvalidArgumentError(f"base {base} has rank {base.n}, expected {ctx.n}")
    if not base.is_integral():
        raise UnsupportedError(f"base {base} is not integral")
    v = shifted(ctx, base).coords
    if any(v[k] >= v[k + 1] for k in range(ctx.n - 1)):
        raise UnsupportedError(
            f"base {base} is not anti-dominant regular (entries of base+rho must strictly increase)"
        )


def basis_matrix(base: Weight) -> BasisMatrix:
    ctx = make_context(base.n)
    check_base(ctx, base)
    s2v, v2s = _matrices(ctx.n)
    return BasisMatrix(base, all_elements(ctx.n), s2v, v2s)


def orbit_decomposition(ctx: RankContext, lam: Weight) -> tuple[Weight, WeylElem]:
    """Write an integral regular lam as w.lam0 with lam0 anti-dominant."""
    if not lam.is_integral():
        raise UnsupportedError(f"{lam} is not integral")
    v = shifted(ctx, lam).coords
    if len(set(v)) != len(v):
        raise UnsupportedError(f"{lam} is singular")
    base = unshifted(ctx, sorted(v))
    return base, orbit_element(ctx, base, lam)


def orbit_element(ctx: RankContext, base: Weight, lam: Weight) -> WeylElem:
    """The w with w.base = lam; base must be regular."""
    b = shifted(ctx, base).coords
    v = shifted(ctx, lam).coords
    if sorted(b) != sorted(v):
        raise InvalidArgumentError(f"{lam} is not in the dot orbit of {base}")
    position = {value: j for j, value in enumerate(v, start=1)}
    return WeylElem(tuple(position[value] for value in b))


def simple_in_verma(base: Weight, w: WeylElem) -> GClass:
    """[L(w.base)] in the g0-Verma basis."""
    matrix = basis_matrix(base)
    return _column(matrix, matrix.simple_to_verma, w, Basis.VERMA_G0)


def verma_in_simple(base: Weight, w: WeylElem) -> GClass:
    """[M(w.base)] in the g0-simple basis."""
    matrix = basis_matrix(base)
    return _column(matrix, matrix.verma_to_simple, w, Basis.SIMPLE_G0)


def _column(matrix: BasisMatrix, data: np.ndarray, w: WeylElem, basis: Basis) -> GClass:
    ctx = make_context(matrix.base_point.n)
    if w.n != ctx.n:
        raise InvalidArgumentError(f"S_{w.n} element used with a rank {ctx.n} base")
    col = data[:, matrix.index(w)]
    terms = {
        dot_action(ctx, matrix.elements[r], matrix.base_point): int(col[r])
        for r in np.nonzero(col)[0]
    }
    return GClass(basis, terms)

"""The Weyl group S_n of pe(n)_0 = gl(n): permutations, words, Bruhat order.

Permutations are stored in one-line notation on {1..n}: ``perm[i-1] = w(i)``.
Composition is ``(x * y)(i) = x(y(i))``; right multiplication by s_i swaps
positions i and i+1, left multiplication swaps the values i and i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence, TypeVar

from pejantzen.models import InvalidArgumentError, RankMismatchError

T = TypeVar("T")


@dataclass(frozen=True, order=True)
class WeylElem:
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise InvalidArgumentError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "WeylElem":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "WeylElem":
        return cls.identity(n).right_mul_simple(i)

    def _check(self, other: "WeylElem") -> None:
        if self.n != other.n:
            raise RankMismatchError(f"S_{self.n} element combined with S_{other.n} element")

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        self._check(other)
        return WeylElem(tuple(self.perm[j - 1] for j in other.perm))

    def inverse(self) -> "WeylElem":
        inv = [0] * self.n
        for i, image in enumerate(self.perm, start=1):
            inv[image - 1] = i
        return WeylElem(tuple(inv))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise InvalidArgumentError(f"simple reflection index {i} out of range 1..{self.n - 1}")

    def right_mul_simple(self, i: int) -> "WeylElem":
        self._check_index(i)
        p = list(self.perm)
        p[i - 1], p[i] = p[i], p[i - 1]
        return WeylElem(tuple(p))

    def left_mul_simple(self, i: int) -> "WeylElem":
        self._check_index(i)
        swap = {i: i + 1, i + 1: i}
        return WeylElem(tuple(swap.get(v, v) for v in self.perm))

    def has_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w)."""
        self._check_index(i)
        return self.perm[i - 1] > self.perm[i]

    def length(self) -> int:
        p = self.perm
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if p[a] > p[b])

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word, built by stripping right descents."""
        word: list[int] = []
        w = self
        while not w.is_identity():
            i = next(k for k in range(1, self.n) if w.has_right_descent(k))
            word.append(i)
            w = w.right_mul_simple(i)
        return tuple(reversed(word))

    def act(self, v: Sequence[T]) -> tuple[T, ...]:
        """Permute coordinates: w(eps_i) = eps_{w(i)}."""
        if len(v) != self.n:
            raise RankMismatchError(f"S_{self.n} acting on a vector of length {len(v)}")
        out: list = [None] * self.n
        for i, image in enumerate(self.perm):
            out[image - 1] = v[i]
        return tuple(out)

    def to_dict(self) -> dict:
        return {"perm": list(self.perm), "word": list(self.reduced_word()), "length": self.length()}

    def __str__(self) -> str:
        word = self.reduced_word()
        return "e" if not word else "".join(f"s{i}" for i in word)


def from_reduced_word(n: int, word: Iterable[int]) -> WeylElem:
    """s_{i1} s_{i2} ... s_{ik}, multiplied left to right."""
    w = WeylElem.identity(n)
    for i in word:
        w = w.right_mul_simple(i)
    return w


def longest_element(n: int) -> WeylElem:
    if n < 1:
        raise InvalidArgumentError(f"rank must be positive, got {n}")
    return WeylElem(tuple(range(n, 0, -1)))


@lru_cache(maxsize=None)
def all_elements(n: int) -> tuple[WeylElem, ...]:
    """S_n sorted by (length, perm); a linear extension of the Bruhat order."""
    elems = [WeylElem(p) for p in permutations(range(1, n + 1))]
    return tuple(sorted(elems, key=lambda w: (w.length(), w.perm)))


@lru_cache(maxsize=4096)
def lower_interval(y: WeylElem) -> frozenset[WeylElem]:
    """{x : x <= y}, as the set of subword products of one reduced word of y."""
    products = {WeylElem.identity(y.n)}
    for i in y.reduced_word():
        products |= {u.right_mul_simple(i) for u in products}
    return frozenset(products)


def bruhat_leq(x: WeylElem, y: WeylElem) -> bool:
    x._check(y)
    if x.length() > y.length():
        return False
    return x in lower_interval(y)

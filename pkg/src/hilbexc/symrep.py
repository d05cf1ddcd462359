"""Symmetric group combinatorics at the level of characters.

Partitions and compositions are plain tuples of positive integers.  The
canonical order on partitions is reverse-lexicographic, so ``partitions(3)``
is ``[(3,), (2, 1), (1, 1, 1)]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Mapping, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
IrrepLabel = tuple[Partition, ...]

__all__ = [
    "Partition",
    "Composition",
    "IrrepLabel",
    "ClassFunction",
    "partitions",
    "partition_count",
    "as_partition",
    "class_size",
    "centralizer_order",
    "mn_character",
    "character",
    "trivial_character",
    "inner_product",
    "induce_character",
    "restrict_to_young",
    "double_cosets",
    "stabilizer_of",
    "cycle_type",
]


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {list(p)}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {list(p)}")
    return p


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_bounded(n, n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence (independent of the enumerator)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def centralizer_order(mu: Partition) -> int:
    """z_mu = ∏_v v^{k_v} k_v!."""
    return prod(v**k * factorial(k) for v, k in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line notation on ``0..n-1``."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _beta_set(lam: Partition) -> tuple[int, ...]:
    m = len(lam)
    return tuple(lam[i] + (m - 1 - i) for i in range(m))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    m = len(b)
    return tuple(x for x in (b[i] - (m - 1 - i) for i in range(m)) if x > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # leg length = beads strictly between target and b
        height = sum(1 for x in beta if target < x < b)
        new_beta = [x for x in beta if x != b] + [target]
        total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """χ^λ(μ) by the Murnaghan–Nakayama rule (rim hooks removed on the abacus)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"partitions of different sizes: {list(lam)} and {list(mu)}")
    return _mn(lam, mu)


@dataclass(frozen=True)
class ClassFunction:
    """A class function on S_n, keyed by cycle type."""

    n: int
    values: Mapping[Partition, int | Fraction] = field(hash=False)

    def __post_init__(self):
        vals = {as_partition(mu): v for mu, v in self.values.items()}
        missing = [mu for mu in partitions(self.n) if mu not in vals]
        if missing:
            raise ValueError(f"class function on S_{self.n} undefined at {missing}")
        if any(sum(mu) != self.n for mu in vals):
            raise ValueError(f"cycle type of wrong size for S_{self.n}")
        object.__setattr__(self, "values", vals)

    def __call__(self, mu: Sequence[int]):
        return self.values[tuple(mu)]

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        _same_n(self, other)
        return ClassFunction(self.n, {mu: self(mu) * other(mu) for mu in partitions(self.n)})

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _same_n(self, other)
        return ClassFunction(self.n, {mu: self(mu) + other(mu) for mu in partitions(self.n)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and all(self(mu) == other(mu) for mu in partitions(self.n))

    def __hash__(self):
        return hash((self.n, tuple(self(mu) for mu in partitions(self.n))))

    def as_list(self) -> list:
        """Values aligned with ``partitions(n)``."""
        return [self(mu) for mu in partitions(self.n)]


def _same_n(f: ClassFunction, g: ClassFunction) -> None:
    if f.n != g.n:
        raise ValueError(f"class functions on S_{f.n} and S_{g.n}")


def character(lam: Sequence[int]) -> ClassFunction:
    lam = as_partition(lam)
    n = sum(lam)
    return ClassFunction(n, {mu: _mn(lam, mu) for mu in partitions(n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: 1 for mu in partitions(n)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    _same_n(f, g)
    total = sum(class_size(mu) * f(mu) * g(mu) for mu in partitions(f.n))
    return Fraction(total, factorial(f.n))


def _merge(types: Sequence[Partition]) -> Partition:
    return tuple(sorted((x for t in types for x in t), reverse=True))


def induce_character(comp: Sequence[int], chars: Sequence[ClassFunction]) -> ClassFunction:
    """Character of Ind_{S_{b_1}×⋯×S_{b_r}}^{S_n} of the outer product of ``chars``.

    Ind f(μ) = z_μ Σ ∏_j f_j(μ_j) / z_{μ_j}, over tuples (μ_j ⊢ b_j) whose union is μ.
    """
    comp = tuple(comp)
    if len(comp) != len(chars):
        raise ValueError(f"{len(chars)} characters for a composition with {len(comp)} blocks")
    for b, f in zip(comp, chars):
        if f.n != b:
            raise ValueError(f"character on S_{f.n} attached to a block of size {b}")
    n = sum(comp)
    acc: dict[Partition, Fraction] = {mu: Fraction(0) for mu in partitions(n)}
    for types in product(*(partitions(b) for b in comp)):
        weight = Fraction(prod(f(t) for f, t in zip(chars, types)), prod(centralizer_order(t) for t in types))
        acc[_merge(types)] += weight
    values = {}
    for mu, v in acc.items():
        v = v * centralizer_order(mu)
        values[mu] = int(v) if v.denominator == 1 else v
    return ClassFunction(n, values)


def restrict_to_young(lam: Sequence[int], comp: Sequence[int]) -> dict[tuple[Partition, ...], int]:
    """χ^λ on the Young subgroup, keyed by the tuple of block cycle types."""
    lam = as_partition(lam)
    return {types: _mn(lam, _merge(types)) for types in product(*(partitions(b) for b in comp))}


def double_cosets(a: Sequence[int], b: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Non-negative integer matrices with row sums ``a`` and column sums ``b``.

    These index the double cosets S_a \\ S_n / S_b of two Young subgroups.
    """
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        raise ValueError(f"compositions of different sizes: {list(a)} and {list(b)}")
    out: list[tuple[tuple[int, ...], ...]] = []

    def rows_for(total: int, caps: list[int], j: int):
        if j == len(caps) - 1:
            if total <= caps[j]:
                yield (total,)
            return
        rest_cap = sum(caps[j + 1:])
        for x in range(max(0, total - rest_cap), min(total, caps[j]) + 1):
            for tail in rows_for(total - x, caps, j + 1):
                yield (x,) + tail

    def rec(i: int, remaining: list[int], acc: list[tuple[int, ...]]):
        if i == len(a):
            if not any(remaining):
                out.append(tuple(acc))
            return
        for row in rows_for(a[i], remaining, 0):
            rec(i + 1, [r - x for r, x in zip(remaining, row)], acc + [row])

    if not b:
        return [()] if not a else []
    rec(0, list(b), [])
    return out


def stabilizer_of(alpha: Sequence[int]) -> Composition:
    """Block sizes of the Young subgroup fixing a non-decreasing multi-index."""
    alpha = tuple(alpha)
    if any(alpha[i] > alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError(f"multi-index {list(alpha)} is not non-decreasing")
    counts = Counter(alpha)
    return tuple(counts[v] for v in sorted(counts))

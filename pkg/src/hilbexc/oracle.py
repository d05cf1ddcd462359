"""Brute-force reference path for equivariant Ext dimensions.

Nothing here goes through double cosets, graded-trace formulas or the
Murnaghan–Nakayama rule.  Irreducible representations come from Young's
seminormal form, the Koszul sign of every basis vector is found by moving it,
and S_n-invariants are counted by averaging traces over every element of S_n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from ._accel import signed_fixed_trace
from .gvs import GradedDim

Matrix = tuple[tuple[Fraction, ...], ...]


@lru_cache(maxsize=None)
def standard_tableaux(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Standard Young tableaux of ``shape``; each maps entry ``i`` to its ``(row, col)``."""
    n = sum(shape)
    out = []

    def fill(filled: list[int], placed: list[tuple[int, int]]):
        if len(placed) == n:
            out.append(tuple(placed))
            return
        for r, length in enumerate(shape):
            c = filled[r]
            if c < length and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                placed.append((r, c))
                fill(filled, placed)
                placed.pop()
                filled[r] -= 1

    fill([0] * len(shape), [])
    return tuple(out)


def _identity(d: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


@lru_cache(maxsize=None)
def adjacent_matrix(shape: tuple[int, ...], i: int) -> Matrix:
    """Seminormal matrix of the transposition (i, i+1), 0-based entries."""
    tabs = standard_tableaux(shape)
    index = {t: pos for pos, t in enumerate(tabs)}
    d = len(tabs)
    m = [[Fraction(0)] * d for _ in range(d)]
    for col, t in enumerate(tabs):
        (r1, c1), (r2, c2) = t[i], t[i + 1]
        if r1 == r2:
            m[col][col] = Fraction(1)
        elif c1 == c2:
            m[col][col] = Fraction(-1)
        else:
            axial = Fraction(1, (c2 - r2) - (c1 - r1))
            swapped = list(t)
            swapped[i], swapped[i + 1] = t[i + 1], t[i]
            other = index[tuple(swapped)]
            m[col][col] = axial
            # column of v_t: axial * v_t + coefficient * v_swapped
            m[other][col] = Fraction(1) if r2 > r1 else 1 - axial * axial
    return tuple(tuple(row) for row in m)


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][x] * b[x][j] for x in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def adjacent_word(perm: Sequence[int]) -> list[int]:
    """Adjacent transpositions whose product is ``perm`` (up to inversion)."""
    arr = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(arr) - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                word.append(j)
                changed = True
    return word


@lru_cache(maxsize=None)
def representation_matrix(shape: tuple[int, ...], perm: tuple[int, ...]) -> Matrix:
    d = len(standard_tableaux(shape))
    m = _identity(d)
    for j in adjacent_word(perm):
        m = _matmul(m, adjacent_matrix(shape, j))
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def seminormal_trace(shape: tuple[int, ...], perm: tuple[int, ...]) -> int:
    if not shape:
        return 1
    m = representation_matrix(shape, perm)
    t = sum(m[i][i] for i in range(len(m)))
    if t.denominator != 1:
        raise ArithmeticError(f"non-integral character value {t}")
    return int(t)


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p ∘ q`` in one-line notation (apply ``q`` first)."""
    return tuple(p[q[i]] for i in range(len(q)))


def _inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _act(h: Sequence[int], gamma: Sequence[int]) -> tuple[int, ...]:
    """Move the entry at position i to position h[i]."""
    out = [0] * len(gamma)
    for i, x in enumerate(gamma):
        out[h[i]] = x
    return tuple(out)


def _orbit_with_representatives(alpha: tuple[int, ...]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Map each rearrangement γ of ``alpha`` to a permutation g with g·alpha = γ."""
    reps = {}
    for gamma in sorted(set(permutations(alpha))):
        g = [0] * len(alpha)
        free = {v: [i for i, x in enumerate(gamma) if x == v] for v in set(alpha)}
        for i, v in enumerate(alpha):
            g[i] = free[v].pop(0)
        reps[gamma] = tuple(g)
    return reps


def _irrep_trace(alpha: tuple[int, ...], irrep, k: tuple[int, ...]) -> int:
    """Character of ⊠ V_λ at an element ``k`` of Stab(alpha) (alpha non-decreasing)."""
    value = 1
    start = 0
    for lam in irrep:
        m = sum(lam)
        block = tuple(k[i] - start for i in range(start, start + m))
        if sorted(block) != list(range(m)):
            raise AssertionError("element does not preserve the stabilizer blocks")
        value *= seminormal_trace(tuple(lam), block)
        if value == 0:
            return 0
        start += m
    return value


def _basis_degrees(g: GradedDim) -> list[int]:
    return [d for d, m in g.items() for _ in range(m)]


def brute_force_ext(a, b, table) -> GradedDim:
    """dim Hom_{S_n}(Inf(E(α)⊗V), Inf(E(β)⊗W)) degree by degree, by averaging traces."""
    n = a.n
    orbit_a = _orbit_with_representatives(a.alpha)
    orbit_b = _orbit_with_representatives(b.alpha)
    acc: dict[int, int] = {}
    for h in permutations(range(n)):
        fixed_a = [(g, orbit) for g, orbit in orbit_a.items() if _act(h, g) == g]
        if not fixed_a:
            continue
        fixed_b = [(d, orbit) for d, orbit in orbit_b.items() if _act(h, d) == d]
        for gamma, g_gamma in fixed_a:
            chi_v = _irrep_trace(a.alpha, a.irrep, _compose(_inverse(g_gamma), _compose(h, g_gamma)))
            if chi_v == 0:
                continue
            for delta, g_delta in fixed_b:
                chi_w = _irrep_trace(b.alpha, b.irrep, _compose(_inverse(g_delta), _compose(h, g_delta)))
                if chi_w == 0:
                    continue
                degrees = [_basis_degrees(table[gamma[i] - 1][delta[i] - 1]) for i in range(n)]
                if any(not d for d in degrees):
                    continue
                for deg, tr in signed_fixed_trace(list(h), degrees).items():
                    acc[deg] = acc.get(deg, 0) + chi_v * chi_w * tr
    order = factorial(n)
    out = {}
    for deg, v in acc.items():
        if v % order or v < 0:
            raise ArithmeticError(f"invariant count {v}/{order} in degree {deg}")
        out[deg] = v // order
    return GradedDim(out)

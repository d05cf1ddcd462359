from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbexc.oracle import seminormal_trace, standard_tableaux
from hilbexc.symrep import (
    ClassFunction,
    character,
    class_size,
    cycle_type,
    double_cosets,
    induce_character,
    inner_product,
    mn_character,
    partition_count,
    partitions,
    restrict_to_young,
    stabilizer_of,
    trivial_character,
)


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def word(comp):
    """Multi-index whose stabilizer is the Young subgroup of ``comp``."""
    return tuple(v for v, m in enumerate(comp) for _ in range(m))


def act(perm, w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[perm[i]] = x
    return tuple(out)


def test_partition_examples():
    assert partitions(1) == [(1,)]
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]


@pytest.mark.parametrize("n,count", [(5, 7), (10, 42)])
def test_partition_counts_by_exhaustion(n, count):
    # every weakly decreasing rearrangement of every composition
    found = {tuple(sorted(c, reverse=True)) for c in compositions(n)}
    assert len(found) == count == len(partitions(n)) == partition_count(n)
    assert set(partitions(n)) == found


def test_partition_count_recurrence():
    assert [partition_count(n) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    for n in range(20):
        assert partition_count(n) == len(partitions(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_by_counting_permutations(n):
    counts = Counter(cycle_type(p) for p in permutations(range(n)))
    assert counts == {mu: class_size(mu) for mu in partitions(n)}
    assert sum(class_size(mu) for mu in partitions(n)) == factorial(n)


def test_class_size_examples():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3


def test_mn_examples():
    assert mn_character((2, 1), (1, 1, 1)) == 2 == len(standard_tableaux((2, 1)))
    assert mn_character((2, 1), (3,)) == -1
    for n in range(1, 6):
        for mu in partitions(n):
            assert mn_character((n,), mu) == 1
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 6))
def test_mn_matches_seminormal_form(n):
    for perm in permutations(range(n)):
        mu = cycle_type(perm)
        for lam in partitions(n):
            assert mn_character(lam, mu) == seminormal_trace(lam, perm)


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality_relations(n):
    parts = partitions(n)
    for lam in parts:
        for rho in parts:
            assert inner_product(character(lam), character(rho)) == (lam == rho)
    for mu in parts:
        for nu in parts:
            col = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            assert col == (factorial(n) // class_size(mu) if mu == nu else 0)
    assert sum(mn_character(lam, (1,) * n) ** 2 for lam in parts) == factorial(n)


def test_inner_product_examples():
    assert inner_product(trivial_character(4), trivial_character(4)) == 1
    with pytest.raises(ValueError):
        inner_product(trivial_character(3), trivial_character(4))


def test_induce_examples():
    assert induce_character((3,), [trivial_character(3)]) == trivial_character(3)
    s2 = induce_character((1, 1), [trivial_character(1)] * 2)
    assert s2.as_list() == [0, 2]  # classes (2), (1,1)
    s3 = induce_character((2, 1), [trivial_character(2), trivial_character(1)])
    assert [s3((1, 1, 1)), s3((2, 1)), s3((3,))] == [3, 1, 0]
    with pytest.raises(ValueError):
        induce_character((2, 1), [trivial_character(3)])


@pytest.mark.parametrize("n", range(1, 6))
def test_induced_trivial_is_permutation_character(n):
    # Ind_{H_a} triv counts rearrangements of a word fixed by the permutation
    for comp in compositions(n):
        w = word(comp)
        orbit = set(permutations(w))
        ind = induce_character(comp, [trivial_character(m) for m in comp])
        for perm in permutations(range(n)):
            assert ind(cycle_type(perm)) == sum(1 for g in orbit if act(perm, g) == g)


@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_reciprocity(n):
    for comp in compositions(n):
        for chars in product(*(partitions(m) for m in comp)):
            fs = [character(c) for c in chars]
            ind = induce_character(comp, fs)
            for lam in partitions(n):
                res = restrict_to_young(lam, comp)
                # ⟨f, Res χ⟩ over the Young subgroup, block by block
                rhs = Fraction(0)
                for types, value in res.items():
                    weight = 1
                    for f, mu in zip(fs, types):
                        weight *= Fraction(class_size(mu) * f(mu), factorial(sum(mu)))
                    rhs += weight * value
                assert inner_product(ind, character(lam)) == rhs


def test_double_coset_examples():
    assert len(double_cosets((2,), (2,))) == 1
    assert len(double_cosets((1, 1), (1, 1))) == 2
    assert len(double_cosets((2, 1), (2, 1))) == 2
    with pytest.raises(ValueError):
        double_cosets((2,), (1, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_double_cosets_match_inner_products(n):
    comps = list(compositions(n))
    for a in comps:
        ia = induce_character(a, [trivial_character(m) for m in a])
        for b in comps:
            ib = induce_character(b, [trivial_character(m) for m in b])
            tables = double_cosets(a, b)
            assert len(tables) == inner_product(ia, ib)
            for t in tables:
                assert [sum(r) for r in t] == list(a)
                assert [sum(c) for c in zip(*t)] == list(b)


@pytest.mark.parametrize("a,b", [((2, 1), (1, 2)), ((1, 1, 1), (2, 1)), ((2, 2), (1, 2, 1))])
def test_double_cosets_by_orbit_count(a, b):
    # H_a-orbits on the rearrangements of the word for b
    n = sum(a)
    ha = [p for p in permutations(range(n)) if act(p, word(a)) == word(a)]
    seen, orbits = set(), 0
    for g in set(permutations(word(b))):
        if g in seen:
            continue
        orbits += 1
        seen |= {act(h, g) for h in ha}
    assert orbits == len(double_cosets(a, b))


def test_stabilizer_examples():
    assert stabilizer_of((1, 1, 1, 1)) == (4,)
    assert stabilizer_of((1, 2, 3)) == (1, 1, 1)
    assert stabilizer_of((1, 1, 2)) == (2, 1)
    with pytest.raises(ValueError):
        stabilizer_of((2, 1))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
def test_stabilizer_blocks_sum_to_length(xs):
    alpha = tuple(sorted(xs))
    blocks = stabilizer_of(alpha)
    assert sum(blocks) == len(alpha)
    assert len(blocks) == len(set(alpha))


def test_class_function_arithmetic():
    f = character((2, 1))
    g = f * f
    assert g((1, 1, 1)) == 4
    assert (f + trivial_character(3))((3,)) == 0
    with pytest.raises(ValueError):
        ClassFunction(3, {(3,): 1})

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from hilbexc.symrep import partition_count, partitions
from hilbexc.twistgroup import (
    Generator,
    TestObject,
    action_matrix,
    all_test_objects,
    apply_generator,
    apply_word,
    bareiss_rank,
    commutation_check,
    elimination_minor,
    faithful_rank,
    generators,
    rank_certificate,
)


def test_generator_examples():
    assert apply_generator(Generator("TBox"), TestObject("MixedEF", k=1), 3).state == (-1, 0)
    assert apply_generator(Generator("TRho", (2,)), TestObject("BoxE", rho=(2,)), 2).state == (-3, 1)
    assert apply_generator(Generator("TRho", (2,)), TestObject("BoxE", rho=(1, 1)), 2).state == (0, 0)
    assert apply_generator(Generator("Shift1"), TestObject("PureF"), 4).state == (1, 0)
    assert apply_generator(Generator("TBox"), TestObject("PureF"), 4).state == (0, 0)


def test_inconsistent_n_rejected():
    with pytest.raises(ValueError):
        apply_generator(Generator("Shift1"), TestObject("MixedEF", k=3), 3)
    with pytest.raises(ValueError):
        apply_generator(Generator("Shift1"), TestObject("BoxE", rho=(2,)), 3)
    with pytest.raises(ValueError):
        apply_generator(Generator("TRho", (2,)), TestObject("PureF"), 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_generators_commute(n):
    assert commutation_check(n)
    for g in generators(n):
        assert commutation_check(n, [g])


def test_action_matrix_for_pairs():
    am = action_matrix(2)
    assert am.rows == ("PureF", "MixedEF(1)", "BoxE(2)", "BoxE(1,1)")
    assert am.cols == ("Shift1", "TBox", "TRho(2)", "TRho(1,1)")
    assert am.entries == ((1, 0, 0, 0), (1, -1, 0, 0), (1, -2, -3, 0), (1, -2, 0, -3))


@pytest.mark.parametrize("n", range(2, 7))
def test_action_matrix_structure(n):
    am = action_matrix(n)
    assert len(am.rows) == 1 + (n - 1) + partition_count(n)
    assert all(row[0] == 1 for row in am.entries)
    for c, rho in enumerate(partitions(n), start=2):
        column = [row[c] for row in am.entries]
        nonzero = [(am.rows[i], v) for i, v in enumerate(column) if v]
        assert nonzero == [("BoxE(" + ",".join(map(str, rho)) + ")", -(2 * n - 1))]


@pytest.mark.parametrize("n,rank", [(2, 4), (3, 5), (6, 13)])
def test_rank_examples(n, rank):
    assert faithful_rank(n) == rank


@pytest.mark.parametrize("n", range(2, 7))
def test_kernel_trivial_by_smith_form(n):
    am = action_matrix(n)
    m = Matrix(am.entries)
    assert m.rank() == faithful_rank(n) == partition_count(n) + 2
    snf = smith_normal_form(m, domain=ZZ)
    diagonal = [snf[i, i] for i in range(min(snf.shape)) if snf[i, i] != 0]
    # full column rank: no integer relation among generator exponents
    assert len(diagonal) == m.shape[1]


@pytest.mark.parametrize("n", range(2, 7))
def test_elimination_certificate(n):
    rows, det = elimination_minor(n)
    assert rows[:2] == ["PureF", "MixedEF(1)"]
    assert det == -((-(2 * n - 1)) ** partition_count(n))
    cert = rank_certificate(n)
    assert cert.kernel_trivial and cert.discrepancy
    assert "Z^{p(n)}" in cert.note and f"p(n)+2" in cert.note
    assert cert.to_json()["rank"] == partition_count(n) + 2


def test_bareiss_against_known_ranks():
    assert bareiss_rank([[1, 2], [2, 4]])[0] == 1
    assert bareiss_rank([[0, 0], [0, 0]])[0] == 0
    assert bareiss_rank([[2, 1, 0], [4, 2, 1], [0, 0, 3]])[0] == 2
    assert bareiss_rank([])[0] == 0


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5))
def test_bareiss_matches_sympy(rows):
    assert bareiss_rank(rows)[0] == Matrix(rows).rank()


@settings(max_examples=100)
@given(st.integers(2, 5), st.data())
def test_parity_tracks_trho_exponents(n, data):
    gens = generators(n)
    exps = {g: data.draw(st.integers(-4, 4)) for g in gens}
    boxes = [o for o in all_test_objects(n) if o.kind == "BoxE"]
    trivial = all(apply_word(n, exps, o).omega_parity == 0 for o in boxes)
    assert trivial == all(e % 2 == 0 for g, e in exps.items() if g.kind == "TRho")


@settings(max_examples=100)
@given(st.integers(2, 5), st.data())
def test_word_shift_is_linear(n, data):
    gens = generators(n)
    exps = {g: data.draw(st.integers(-4, 4)) for g in gens}
    am = action_matrix(n)
    for o, row in zip(all_test_objects(n), am.entries):
        moved = apply_word(n, exps, o)
        assert moved.shift == sum(v * exps[g] for v, g in zip(row, gens))

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbexc.functorcalc import (
    Case,
    FormalKernel,
    FunctorClass,
    GeometricInput,
    KernelAtom,
    RankInput,
    compose_kernels,
    euler_consistency,
    geometric_series,
    grg,
    pn_condition1_check,
    rank_fr,
    rank_twist,
)
from hilbexc.gvs import ONE, C, GradedDim, shift

D, P, PO = KernelAtom.DIAGONAL, KernelAtom.PRODUCT, KernelAtom.PRODUCT_OMEGA


def test_input_invariants():
    with pytest.raises(ValueError):
        GeometricInput(1, 2, ONE + C(-2), Case.EVEN_CY)
    with pytest.raises(ValueError):
        GeometricInput(3, 3, ONE + C(-3), Case.EVEN_CY)
    with pytest.raises(ValueError):
        GeometricInput(3, 2, ONE + C(-2), Case.ODD_CY)
    with pytest.raises(ValueError):
        GeometricInput(3, 2, ONE + C(-2), Case.TRIVIAL)
    with pytest.raises(ValueError):
        RankInput(1, 1)
    assert GeometricInput.calabi_yau(5, 3).case is Case.ODD_CY


def test_compose_examples():
    comp = compose_kernels(GeometricInput.calabi_yau(2, 3))
    assert comp["G'^RG'"] == FormalKernel({PO: shift(geometric_series(2, 4), 2)})
    assert comp["G'^RG'"][PO] == GradedDim({-2: 1, 0: 1, 2: 1, 4: 1})
    comp = compose_kernels(GeometricInput.trivial(2))
    assert comp["G''^RG''"] == FormalKernel({D: ONE, P: ONE})
    comp = compose_kernels(GeometricInput.calabi_yau(3, 4))
    assert comp["G''^RG'"] == FormalKernel({P: ONE + C(-3)})
    assert set(comp) == {"G'^RG'", "G'^RG''", "G''^RG'", "G''^RG''"}


def test_grg_examples():
    kernel, cls = grg(GeometricInput.calabi_yau(2, 3))
    assert kernel == FormalKernel({D: GradedDim({0: 1, 2: 1, 4: 1})})
    assert cls == FunctorClass(FunctorClass.PN, 2) and str(cls) == "P^2-functor"
    kernel, cls = grg(GeometricInput.calabi_yau(3, 5))
    assert kernel == FormalKernel({D: ONE + C(-3)}) and cls.tag == FunctorClass.SPHERE_LIKE
    for n in range(2, 9):
        kernel, cls = grg(GeometricInput.trivial(n))
        assert kernel == FormalKernel({D: ONE}) and cls.tag == FunctorClass.FULLY_FAITHFUL


def test_odd_cy_pair_is_undetermined():
    kernel, cls = grg(GeometricInput.calabi_yau(3, 2))
    assert kernel is None and cls.tag == FunctorClass.UNDETERMINED
    with pytest.raises(ValueError):
        euler_consistency(GeometricInput.calabi_yau(3, 2))
    assert grg(GeometricInput(3, 2, ONE + C(-1), Case.OTHER))[1].tag == FunctorClass.UNDETERMINED


def test_pn_condition_examples():
    for d in (2, 4, 6):
        for n in range(2, 11):
            assert pn_condition1_check(grg(GeometricInput.calabi_yau(d, n))[0], n, d)
    assert not pn_condition1_check(FormalKernel({D: ONE + C(-2)}), 3, 2)
    assert not pn_condition1_check(FormalKernel({D: geometric_series(2, 3), P: ONE}), 3, 2)
    assert not pn_condition1_check(None, 3, 2)
    for n in range(3, 11):
        assert not pn_condition1_check(grg(GeometricInput.calabi_yau(3, n))[0], n, 3)
        assert not pn_condition1_check(grg(GeometricInput.trivial(n))[0], n, 2)


@pytest.mark.parametrize("d", range(1, 8))
def test_euler_consistency(d):
    for n in range(2, 11):
        g = GeometricInput.calabi_yau(d, n)
        if grg(g)[0] is not None:
            assert euler_consistency(g)
        assert euler_consistency(GeometricInput.trivial(n, d))


def test_grg_is_diagonal_and_nonnegative():
    for d in range(1, 8):
        for n in range(2, 11):
            kernel, _ = grg(GeometricInput.calabi_yau(d, n))
            if kernel is not None:
                assert kernel.atoms() == (D,)
                assert all(m > 0 for _, m in kernel[D].items())


def test_kernel_json_and_text():
    k = FormalKernel({D: ONE + C(-2), PO: ONE})
    assert k.to_json() == {"Diagonal": {"0": 1, "2": 1}, "ProductOmega": {"0": 1}}
    assert str(FormalKernel({D: ONE + C(-2)})) == "Δ·(C[0]⊕C[-2])"
    assert FormalKernel({P: GradedDim()}).atoms() == ()
    assert k + k == FormalKernel({D: GradedDim({0: 2, 2: 2}), PO: GradedDim({0: 2})})


def test_rank_examples():
    assert rank_fr(RankInput(1, 3)) == -5
    assert rank_fr(RankInput(6, 3)) == 0
    assert rank_fr(RankInput(2, 2)) == -2
    for n in range(2, 11):
        assert rank_twist(RankInput(1, n)) == 4 * n - 2
    assert rank_twist(RankInput(6, 3)) == 0
    assert rank_twist(RankInput(2, 3)) == 8


@given(st.integers(-100, 100), st.integers(2, 50))
def test_twist_rank_is_minus_twice_fr(chi, n):
    r = RankInput(chi, n)
    assert rank_twist(r) == -2 * rank_fr(r)

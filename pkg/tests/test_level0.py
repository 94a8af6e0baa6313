import pytest

from qlzero.kernel import kernel_build
from qlzero.laurent import LaurentPoly
from qlzero.level0 import (
    chevalley_check,
    e0_apply,
    e_op,
    evaluation_module_suite,
    f0_apply,
    f_op,
    rhosg_check,
    series_e0,
    t0_apply,
)
from qlzero.scalars import qpow
from qlzero.tensor import MINUS, PLUS, TensorPoly, sign_strings, uq_apply, weight_degree
from qlzero.windows import Window, cone_cell


def test_t0_diagonal_and_level_zero():
    x = TensorPoly.basis((PLUS, PLUS), LaurentPoly.monomial(2, (-1, 0)))
    assert t0_apply(x) == x.scale(qpow(-2))
    y = TensorPoly.basis((PLUS, MINUS), LaurentPoly.one(2))
    assert t0_apply(y) == y
    # t0 after the finite t-action is the identity (central element trivial)
    for eps in sign_strings(2):
        z = TensorPoly.basis(eps, LaurentPoly.one(2))
        assert t0_apply(uq_apply("t1", z)) == z


def test_single_slot_lowering():
    x = TensorPoly.basis((PLUS,), LaurentPoly.one(1))
    assert series_e0(x) == TensorPoly.basis((MINUS,), LaurentPoly.one(1))
    assert e0_apply(x) == TensorPoly.basis((MINUS,), LaurentPoly.one(1))
    assert not e0_apply(TensorPoly.basis((MINUS,), LaurentPoly.monomial(1, (-2,))))


def test_single_slot_raising():
    x = TensorPoly.basis((MINUS,), LaurentPoly.one(1))
    assert f0_apply(x) == TensorPoly.basis((PLUS,), LaurentPoly.one(1))
    assert not f0_apply(TensorPoly.basis((PLUS,), LaurentPoly.one(1)))


def test_weight_bookkeeping():
    for eps in sign_strings(2):
        for m in cone_cell(2, -2):
            x = TensorPoly.monomial(eps, m)
            y = e0_apply(x)
            if y:
                gx = weight_degree(x).pop()
                for g in weight_degree(y):
                    assert g.weight == gx.weight - 2
                    assert g.degree == gx.degree
            z = f0_apply(x)
            if z:
                gx = weight_degree(x).pop()
                for g in weight_degree(z):
                    assert g.weight == gx.weight + 2


def test_two_slot_series_image_weight_degree():
    x = TensorPoly.basis((PLUS, PLUS), LaurentPoly.one(2))
    y = series_e0(x)
    assert y
    for g in weight_degree(y):
        assert g.weight == 0 and g.degree == 0


def test_rhosg_exact_small_windows():
    for p in (qpow(4), qpow(3)):
        rep = rhosg_check(2, p, Window(2, -3))
        assert rep.ok, rep.lines()
    rep = rhosg_check(3, qpow(4), Window(3, -2))
    assert rep.ok, rep.lines()


def test_evaluation_module_relations():
    for n in (1, 2, 3):
        rep = evaluation_module_suite(n)
        assert rep.ok, rep.lines()


def test_chevalley_on_quotient():
    kb = kernel_build(2, Window(2, -3), families=("HEC", "HWT"))
    rep = chevalley_check(2, Window(2, -3), kb)
    assert rep.ok, rep.lines()


def test_chevalley_window_underflow():
    kb = kernel_build(2, Window(2, -2), families=("HEC", "HWT"))
    with pytest.raises(ValueError):
        chevalley_check(2, Window(2, -4), kb)


def test_hat_action_requires_cone():
    x = TensorPoly.monomial((PLUS,), (1,))
    with pytest.raises(ValueError):
        e0_apply(x)


def test_slot_tail_scales():
    # lowering at slot 1 of (+,+) drags an inverse-t factor past slot 2
    x = TensorPoly.basis((PLUS, PLUS), LaurentPoly.one(2))
    assert f_op(x, 1) == TensorPoly.basis((MINUS, PLUS),
                                          LaurentPoly.one(2).scale_coeffs(qpow(-1)))
    assert f_op(x, 2) == TensorPoly.basis((PLUS, MINUS), LaurentPoly.one(2))
    y = TensorPoly.basis((MINUS, MINUS), LaurentPoly.one(2))
    assert e_op(y, 2) == TensorPoly.basis((MINUS, PLUS),
                                          LaurentPoly.one(2).scale_coeffs(qpow(-1)))

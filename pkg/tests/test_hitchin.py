import pytest
from hypothesis import assume, given, strategies as st

from orbitchin import (BundleClass, CurveSignature, SyzOutcome, balanced_class,
                       dimension_report, from_pushforward, gamma0_order, integrable_check,
                       is_hyperbolic, moduli_dim_gl, moduli_dim_sl, syz_check)
from orbitchin.errors import DomainError
from orbitchin.spectral import coeff_entry

P32222 = CurveSignature.from_orders(0, [3, 2, 2, 2, 2])
G2 = CurveSignature(2)


def test_moduli_dims_examples():
    e = from_pushforward(P32222, 0, [(1, 1, 1), (1, 2), (2, 1), (2, 1), (2, 1)])
    assert moduli_dim_gl(e) == 6 and moduli_dim_sl(e) == 6
    assert moduli_dim_gl(balanced_class(G2, 2, 0)) == 10
    assert moduli_dim_sl(balanced_class(G2, 2, 0)) == 6
    line = balanced_class(CurveSignature.from_orders(3, [4, 5]), 1, 2)
    assert moduli_dim_gl(line) == 6 and moduli_dim_sl(line) == 0


def test_moduli_dims_need_hyperbolic():
    with pytest.raises(DomainError):
        moduli_dim_gl(balanced_class(CurveSignature.from_orders(1, []), 2, 0))


@pytest.mark.parametrize("g, r, n", [(0, 5, 1), (1, 2, 4), (2, 3, 81), (3, 3, 729)])
def test_gamma0(g, r, n):
    assert gamma0_order(g, r) == n


def test_dimension_report_examples():
    d = dimension_report(P32222, 3)
    assert (d.moduli_gl, d.moduli_sl, d.base_gl, d.base_sl, d.fiber_gl, d.fiber_sl,
            d.gamma0_order) == (6, 6, 3, 3, 3, 3, 1)
    d = dimension_report(G2, 2)
    assert (d.moduli_gl, d.base_gl, d.fiber_gl) == (10, 5, 5)
    d = dimension_report(CurveSignature.from_orders(2, [3]), 1)
    assert (d.moduli_gl, d.base_gl, d.fiber_gl) == (4, 2, 2)


@pytest.mark.parametrize("g, orders, r", [(0, [3, 2, 2, 2, 2], 3), (2, [], 2),
                                          (1, [2, 2], 2), (3, [7], 5)])
def test_integrable_examples(g, orders, r):
    assert integrable_check(CurveSignature.from_orders(g, orders), r)


def test_syz_examples():
    v = syz_check(P32222, 3)
    assert (v.outcome, v.branch, v.fired_condition) == (SyzOutcome.MIRROR_PARTNERS, 1, "(iv)")
    assert v.generic_weight and v.dims.fiber_sl == 3
    assert v.spectral_curve.orders == (2, 2, 2, 2)
    assert syz_check(CurveSignature.from_orders(0, [4, 2, 2, 2]), 6).outcome \
        is SyzOutcome.SINGULAR_SPECTRAL
    assert syz_check(CurveSignature.from_orders(1, [5]), 2).outcome \
        is SyzOutcome.INTEGRALITY_FAILS
    with pytest.raises(DomainError):
        syz_check(P32222, 1)


@st.composite
def hyperbolic(draw):
    sig = CurveSignature.from_orders(draw(st.integers(0, 4)),
                                     draw(st.lists(st.integers(2, 12), max_size=6)))
    assume(is_hyperbolic(sig))
    return sig


@given(hyperbolic(), st.integers(2, 10), st.integers(-5, 5))
def test_integrable_identity(sig, r, d):
    assert integrable_check(sig, r, d)


@given(st.integers(2, 10), st.integers(2, 12))
def test_per_point_reduction(r, rk):
    row = balanced_class(CurveSignature.from_orders(0, [rk]), r, 0).mult[0]
    assert r * r - sum(m * m for m in row) == 2 * sum(coeff_entry(i, rk).h_tilde
                                                      for i in range(2, r + 1))


@given(hyperbolic(), st.integers(2, 8))
def test_mirror_partners_gate(sig, r):
    v = syz_check(sig, r)
    if v.outcome is SyzOutcome.MIRROR_PARTNERS:
        assert integrable_check(sig, r)
        assert v.spectral_curve.genus == v.dims.fiber_gl

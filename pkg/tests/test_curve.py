from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from orbitchin import (CoverData, CurveSignature, PicClass, QDivisor, canonical_degree,
                       canonical_divisor, divisor_add, divisor_degree, divisor_scale,
                       is_hyperbolic, norm_component, norm_pushforward, pic_class, pic_divisor,
                       pullback_divisor, pushforward_divisor)
from orbitchin.errors import CurveMismatchError, InvalidClassError, OrbitchinError

P4222 = CurveSignature.from_orders(0, [4, 2, 2, 2])
P32222 = CurveSignature.from_orders(0, [3, 2, 2, 2, 2])


@pytest.mark.parametrize("g, orders, expected", [
    (1, [5], F(4, 5)),
    (0, [4, 2, 2, 2], F(1, 4)),
    (2, [], F(2)),
])
def test_canonical_degree(g, orders, expected):
    assert canonical_degree(CurveSignature.from_orders(g, orders)) == expected


@pytest.mark.parametrize("g, orders, expected", [
    (0, [3, 2, 2, 2, 2], True),
    (0, [2, 2, 2], False),
    (2, [], True),
    (0, [2, 3, 6], False),  # degree exactly zero
])
def test_is_hyperbolic(g, orders, expected):
    assert is_hyperbolic(CurveSignature.from_orders(g, orders)) is expected


def test_signature_rejects_bad_input():
    with pytest.raises(OrbitchinError):
        CurveSignature(0, (("a", 2), ("a", 3)))
    with pytest.raises(OrbitchinError):
        CurveSignature(0, (("a", 1),))
    with pytest.raises(OrbitchinError):
        CurveSignature(-1)


def test_divisor_arithmetic():
    a = QDivisor.of(P4222, {"p1": F(1, 4)})
    b = QDivisor.of(P4222, {"p2": F(1, 2)})
    s = divisor_add(a, b)
    assert s.as_dict() == {"p1": F(1, 4), "p2": F(1, 2)}
    assert divisor_degree(s) == F(3, 4)
    assert divisor_scale(a, 4).as_dict() == {"p1": 1}
    assert divisor_degree(canonical_divisor(P4222, "q")) == F(1, 4)


def test_divisor_denominators_checked():
    with pytest.raises(InvalidClassError):
        QDivisor.of(P4222, {"p2": F(1, 4)})
    with pytest.raises(InvalidClassError):
        QDivisor.of(P4222, {"q": F(1, 2)})


def test_divisor_curve_mismatch():
    with pytest.raises(CurveMismatchError):
        divisor_add(QDivisor(P4222), QDivisor(P32222))


@pytest.mark.parametrize("coeffs, d, indices", [
    ({"p1": F(3, 4)}, 0, (3, 0, 0, 0)),
    ({"p1": F(5, 4)}, 1, (1, 0, 0, 0)),
    ({"p1": F(-1, 4), "q": 2}, 1, (3, 0, 0, 0)),
])
def test_pic_class_examples(coeffs, d, indices):
    p = pic_class(QDivisor.of(P4222, coeffs))
    assert (p.coarse_degree, p.indices) == (d, indices)


def test_pic_class_of_canonical():
    p = pic_class(canonical_divisor(P32222, "q"))
    assert (p.coarse_degree, p.indices, p.total_degree) == (-2, (2, 1, 1, 1, 1), F(2, 3))


def test_pic_index_bounds():
    with pytest.raises(InvalidClassError):
        PicClass(P4222, 0, (4, 0, 0, 0))


def test_pushforward_examples():
    assert divisor_degree(pushforward_divisor(QDivisor.of(P4222, {"p1": F(3, 4)}))) == 0
    k6 = divisor_scale(canonical_divisor(P4222, "q"), 6)
    assert divisor_degree(pushforward_divisor(k6)) == 1
    point = QDivisor.of(P4222, {"p1": 1})
    assert pushforward_divisor(point).as_dict() == {"p1": 1}


def _cover():
    src = CurveSignature.from_orders(2, [2], ["x"])
    tgt = CurveSignature.from_orders(0, [4, 3], ["y", "z"])
    return CoverData(src, tgt, 2, (("y", "x"),), (("a", "b"),))


def test_norm_divisor_examples():
    cov = _cover()
    a = QDivisor.of(cov.source, {"x": F(1, 2), "a": 3, "w": -1})
    b = norm_pushforward(cov, a)
    assert b.as_dict() == {"y": F(1, 2), "b": 3, "w": -1}
    assert divisor_degree(b) == divisor_degree(a)


def test_norm_pic_examples():
    cov = _cover()
    assert norm_component(cov, PicClass(cov.source, 5, (1,))) == PicClass(cov.target, 5, (2, 0))
    assert norm_component(cov, PicClass(cov.source, 0, (0,))) == PicClass(cov.target, 0, (0, 0))
    assert norm_component(cov, PicClass(cov.source, 7, (0,))) == PicClass(cov.target, 7, (0, 0))


def test_cover_validation():
    src = CurveSignature.from_orders(1, [3], ["x"])
    tgt = CurveSignature.from_orders(0, [4], ["y"])
    with pytest.raises(OrbitchinError):
        CoverData(src, tgt, 2, (("y", "x"),))
    with pytest.raises(OrbitchinError):
        CoverData(src, tgt, 2)


# --- properties ----------------------------------------------------------------

@st.composite
def signatures(draw, max_points=4):
    g = draw(st.integers(0, 3))
    orders = draw(st.lists(st.integers(2, 9), max_size=max_points))
    return CurveSignature.from_orders(g, orders)


@st.composite
def divisors(draw, sig=None):
    sig = sig if sig is not None else draw(signatures())
    coeffs = {l: F(draw(st.integers(-3 * r, 3 * r)), r) for l, r in sig.points
              if draw(st.booleans())}
    for name in draw(st.lists(st.sampled_from(["q", "s", "t"]), max_size=3, unique=True)):
        coeffs[name] = draw(st.integers(-5, 5))
    return QDivisor.of(sig, coeffs)


@given(divisors())
def test_pic_class_preserves_degree(a):
    assert pic_class(a).total_degree == divisor_degree(a)


@given(divisors())
def test_pushforward_never_increases_degree(a):
    down = divisor_degree(pushforward_divisor(a))
    exact = all(c.denominator == 1 for _, c in a.coeffs)
    assert down <= divisor_degree(a)
    assert (down == divisor_degree(a)) == exact


@given(signatures(), st.dictionaries(st.sampled_from(["p1", "p2", "q"]), st.integers(-4, 4)))
def test_pushforward_of_pullback_is_identity(sig, coeffs):
    coarse = QDivisor.of(sig.coarse(), coeffs)
    assert pushforward_divisor(pullback_divisor(coarse, sig)) == coarse


@given(st.data())
def test_pic_class_of_sum(data):
    sig = data.draw(signatures())
    a, b = data.draw(divisors(sig)), data.draw(divisors(sig))
    pa, pb, ps = pic_class(a), pic_class(b), pic_class(divisor_add(a, b))
    assert ps.total_degree == pa.total_degree + pb.total_degree
    assert ps.indices == tuple((x + y) % r for x, y, r in zip(pa.indices, pb.indices, sig.orders))
    carry = sum((x + y) // r for x, y, r in zip(pa.indices, pb.indices, sig.orders))
    assert ps.coarse_degree == pa.coarse_degree + pb.coarse_degree + carry


@given(divisors())
def test_pic_divisor_round_trip(a):
    p = pic_class(a)
    assert pic_class(pic_divisor(p, "base")) == p


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.data())
def test_norm_preserves_degrees(ratios, data):
    src_orders = data.draw(st.lists(st.integers(2, 4), min_size=len(ratios), max_size=len(ratios)))
    src = CurveSignature.from_orders(data.draw(st.integers(0, 3)), src_orders,
                                     [f"x{i}" for i in range(len(ratios))])
    extra = data.draw(st.lists(st.integers(2, 5), max_size=2))
    tgt_orders = [r * k for r, k in zip(src_orders, ratios)] + extra
    tgt = CurveSignature.from_orders(0, tgt_orders)
    pm = tuple((f"p{i + 1}", f"x{i}") for i in range(len(ratios)))
    cov = CoverData(src, tgt, data.draw(st.integers(1, 5)), pm)
    a = data.draw(divisors(src))
    assert divisor_degree(norm_pushforward(cov, a)) == divisor_degree(a)
    p = pic_class(a)
    q = norm_component(cov, p)
    assert q.coarse_degree == p.coarse_degree
    assert all(i == 0 for i in q.indices[len(ratios):])

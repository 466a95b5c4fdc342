"""Stacky curve signatures, fractional Weil divisors, Picard components and
norm-map transport between stacky curves.

A stacky curve is recorded numerically: the genus of its coarse space and the
ordered list of stacky points with the orders of their cyclic stabilizers.
Divisors have rational coefficients whose denominators divide the local
stabilizer order; line bundles are tracked only by their Picard component
``(d, (i_1, ..., i_m))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import floor
from typing import Iterable, Mapping, Optional, Sequence

from .errors import CurveMismatchError, InvalidClassError, OrbitchinError


@dataclass(frozen=True)
class CurveSignature:
    """Coarse genus plus the ordered stacky points ``(label, order)``."""

    genus: int
    points: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((str(l), int(r)) for l, r in self.points))
        if self.genus < 0:
            raise OrbitchinError(f"genus must be >= 0, got {self.genus}")
        labels = [l for l, _ in self.points]
        if len(set(labels)) != len(labels):
            raise OrbitchinError(f"duplicate point labels in {labels}")
        for label, order in self.points:
            if order < 2:
                raise OrbitchinError(f"point {label!r} has order {order}; stacky orders must be >= 2")

    @classmethod
    def from_orders(cls, genus: int, orders: Iterable[int],
                    labels: Optional[Sequence[str]] = None) -> "CurveSignature":
        orders = list(orders)
        if labels is None:
            labels = [f"p{k + 1}" for k in range(len(orders))]
        if len(labels) != len(orders):
            raise OrbitchinError(f"{len(labels)} labels given for {len(orders)} orders")
        return cls(genus, tuple(zip(labels, orders)))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.points)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l for l, _ in self.points)

    @property
    def m(self) -> int:
        return len(self.points)

    def order_of(self, label: str) -> int:
        """Stabilizer order at ``label`` (1 for a non-stacky point)."""
        return self._order_map.get(label, 1)

    @cached_property
    def _order_map(self) -> dict[str, int]:
        return dict(self.points)

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def coarse(self) -> "CurveSignature":
        return CurveSignature(self.genus)

    def __str__(self):
        if not self.points:
            return f"genus {self.genus}, no stacky points"
        pts = ", ".join(f"{l}:{r}" for l, r in self.points)
        return f"genus {self.genus}, stacky points [{pts}]"


def canonical_degree(sig: CurveSignature) -> Fraction:
    """``2g - 2 + sum (r_k - 1)/r_k``."""
    return 2 * sig.genus - 2 + sum((Fraction(r - 1, r) for r in sig.orders), Fraction(0))


@lru_cache(maxsize=1 << 16)
def is_hyperbolic(sig: CurveSignature) -> bool:
    return canonical_degree(sig) > 0


# --- divisors ---------------------------------------------------------------

@dataclass(frozen=True)
class QDivisor:
    """Finitely supported label -> rational map on a stacky curve.

    Labels that are stacky points of ``curve`` may carry fractions with
    denominator dividing the local order; any other label is an ordinary
    point and must carry an integer. Zero coefficients are dropped.
    """

    curve: CurveSignature
    coeffs: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        merged: dict[str, Fraction] = {}
        for label, c in self.coeffs:
            label, c = str(label), Fraction(c)
            merged[label] = merged[label] + c if label in merged else c
        for label, c in merged.items():
            r = self.curve.order_of(label)
            if r % c.denominator:
                kind = f"stacky point of order {r}" if r > 1 else "non-stacky point"
                raise InvalidClassError(f"coefficient {c} at {label!r} not allowed on a {kind}")
        items = tuple(sorted((l, c) for l, c in merged.items() if c != 0))
        object.__setattr__(self, "coeffs", items)

    @classmethod
    def of(cls, curve: CurveSignature, coeffs: Mapping[str, object]) -> "QDivisor":
        return cls(curve, tuple((l, Fraction(c)) for l, c in coeffs.items()))

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.coeffs)

    def coefficient(self, label: str) -> Fraction:
        return self.as_dict().get(label, Fraction(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{l}" for l, c in self.coeffs)


def _same_curve(a: CurveSignature, b: CurveSignature):
    if a != b:
        raise CurveMismatchError(f"curves differ: {a} vs {b}")


def divisor_add(a: QDivisor, b: QDivisor) -> QDivisor:
    _same_curve(a.curve, b.curve)
    return QDivisor(a.curve, a.coeffs + b.coeffs)


def divisor_scale(a: QDivisor, c: int) -> QDivisor:
    return QDivisor(a.curve, tuple((l, v * c) for l, v in a.coeffs))


def divisor_degree(a: QDivisor) -> Fraction:
    return sum((c for _, c in a.coeffs), Fraction(0))


def canonical_divisor(sig: CurveSignature, base_point: str) -> QDivisor:
    """A divisor representing ``K``: ``(2g-2)*base_point + sum (r_k-1)/r_k p_k``.

    ``base_point`` is a caller-chosen non-stacky label carrying the pullback of
    a canonical divisor of the coarse curve (only its degree matters here).
    """
    if sig.order_of(base_point) != 1:
        raise OrbitchinError(f"base point {base_point!r} must not be a stacky point")
    coeffs = [(base_point, Fraction(2 * sig.genus - 2))]
    coeffs += [(l, Fraction(r - 1, r)) for l, r in sig.points]
    return QDivisor(sig, tuple(coeffs))


def pushforward_divisor(a: QDivisor) -> QDivisor:
    """Coarse pushforward: floor of every coefficient, on the coarse curve."""
    return QDivisor(a.curve.coarse(), tuple((l, Fraction(floor(c))) for l, c in a.coeffs))


def pullback_divisor(a: QDivisor, sig: CurveSignature) -> QDivisor:
    """Pull an integral divisor on the coarse curve of ``sig`` back to ``sig``."""
    if a.curve.points or a.curve.genus != sig.genus:
        raise CurveMismatchError(f"{a.curve} is not the coarse curve of {sig}")
    return QDivisor(sig, a.coeffs)


# --- Picard components -------------------------------------------------------

@dataclass(frozen=True)
class PicClass:
    """Connected component ``Pic^{d,(i_1..i_m)}``: coarse degree plus indices."""

    curve: CurveSignature
    coarse_degree: int
    indices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if not idx and self.curve.m:
            idx = (0,) * self.curve.m
        object.__setattr__(self, "indices", idx)
        if len(idx) != self.curve.m:
            raise InvalidClassError(f"{len(idx)} indices for {self.curve.m} stacky points")
        for i, r in zip(idx, self.curve.orders):
            if not 0 <= i < r:
                raise InvalidClassError(f"index {i} out of range [0, {r - 1}]")

    @property
    def total_degree(self) -> Fraction:
        return self.coarse_degree + sum(
            (Fraction(i, r) for i, r in zip(self.indices, self.curve.orders)), Fraction(0))

    def __str__(self):
        return f"Pic^({self.coarse_degree}, {self.indices})"


def pic_class(a: QDivisor) -> PicClass:
    d = 0
    indices = [0] * a.curve.m
    for label, c in a.coeffs:
        whole = floor(c)
        d += whole
        r = a.curve.order_of(label)
        if r > 1:
            indices[a.curve.index_of(label)] = int((c - whole) * r)
    return PicClass(a.curve, d, tuple(indices))


def pic_divisor(p: PicClass, base_point: str) -> QDivisor:
    """Representative divisor ``d*base_point + sum i_k/r_k p_k`` of a component."""
    if p.curve.order_of(base_point) != 1:
        raise OrbitchinError(f"base point {base_point!r} must not be a stacky point")
    coeffs = [(base_point, Fraction(p.coarse_degree))]
    coeffs += [(l, Fraction(i, r)) for (l, r), i in zip(p.curve.points, p.indices)]
    return QDivisor(p.curve, tuple(coeffs))


# --- covers and norm maps ----------------------------------------------------

@dataclass(frozen=True)
class CoverData:
    """Numerical data of a finite representable cover ``source -> target``.

    ``point_map`` sends target stacky labels to the source stacky point over
    them; every source stacky point must be matched, and its order must divide
    the order of its image. ``label_map`` renames ordinary source points; an
    unlisted ordinary label keeps its name.
    """

    source: CurveSignature
    target: CurveSignature
    degree: int
    point_map: tuple[tuple[str, str], ...] = ()
    label_map: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        pm = tuple(sorted(dict(self.point_map).items()))
        object.__setattr__(self, "point_map", pm)
        object.__setattr__(self, "label_map", tuple(sorted(dict(self.label_map).items())))
        if self.degree < 1:
            raise OrbitchinError(f"cover degree must be >= 1, got {self.degree}")
        sources = [s for _, s in pm]
        if len(set(sources)) != len(sources):
            raise OrbitchinError("two target points matched to the same source point")
        for t, s in pm:
            rt, rs = self.target.order_of(t), self.source.order_of(s)
            if rt == 1:
                raise OrbitchinError(f"{t!r} is not a stacky point of the target")
            if rs == 1:
                raise OrbitchinError(f"{s!r} is not a stacky point of the source")
            if rt % rs:
                raise OrbitchinError(
                    f"source order {rs} at {s!r} does not divide target order {rt} at {t!r}")
        unmatched = set(self.source.labels) - set(sources)
        if unmatched:
            raise OrbitchinError(f"source stacky points {sorted(unmatched)} have no image")

    def image(self, label: str) -> str:
        for t, s in self.point_map:
            if s == label:
                return t
        target = dict(self.label_map).get(label, label)
        if self.target.order_of(target) != 1:
            raise OrbitchinError(
                f"ordinary point {label!r} would land on stacky target point {target!r}")
        return target


def norm_pushforward(cover: CoverData, a: QDivisor) -> QDivisor:
    """Proper pushforward of divisors; each coefficient keeps its value."""
    _same_curve(a.curve, cover.source)
    return QDivisor(cover.target, tuple((cover.image(l), c) for l, c in a.coeffs))


def norm_component(cover: CoverData, p: PicClass) -> PicClass:
    """Image component of the norm map: indices scale by the order ratio."""
    _same_curve(p.curve, cover.source)
    src = dict((s, t) for t, s in cover.point_map)
    indices = [0] * cover.target.m
    for (label, r), i in zip(cover.source.points, p.indices):
        t = src[label]
        indices[cover.target.index_of(t)] = i * (cover.target.order_of(t) // r)
    return PicClass(cover.target, p.coarse_degree, tuple(indices))

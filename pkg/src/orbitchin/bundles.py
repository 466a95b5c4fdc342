"""Numerical K-classes of orbifold bundles.

A class is ``(rank, degree, mult)`` where ``mult[k][j]`` is the multiplicity
of the character ``x^j`` of ``mu_{r_k}`` in the fiber at the k-th stacky
point. Everything downstream (ages, Riemann-Roch, modified Hilbert
polynomials, parabolic weights) is a function of these numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .curve import CurveSignature, PicClass
from .errors import CurveMismatchError, InvalidClassError, OrbitchinError


@dataclass(frozen=True)
class BundleClass:
    curve: CurveSignature
    rank: int
    degree: Fraction
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "degree", Fraction(self.degree))
        object.__setattr__(self, "mult", tuple(tuple(int(x) for x in row) for row in self.mult))
        if self.rank < 1:
            raise InvalidClassError(f"rank must be >= 1, got {self.rank}")
        if len(self.mult) != self.curve.m:
            raise InvalidClassError(
                f"{len(self.mult)} multiplicity vectors for {self.curve.m} stacky points")
        for row, r in zip(self.mult, self.curve.orders):
            if len(row) != r:
                raise InvalidClassError(f"multiplicity vector {row} has length != {r}")
            if min(row) < 0:
                raise InvalidClassError(f"negative multiplicity in {row}")
            if sum(row) != self.rank:
                raise InvalidClassError(f"multiplicities {row} do not sum to rank {self.rank}")
        object.__setattr__(self, "_total_age", _age_sum(self))
        if (self.degree - total_age(self)).denominator != 1:
            raise InvalidClassError(
                f"degree {self.degree} minus total age {total_age(self)} is not an integer")

    def __str__(self):
        return f"rank {self.rank}, degree {self.degree}, mult {list(map(list, self.mult))}"


def _check_same(a: BundleClass, b) -> None:
    if a.curve != b.curve:
        raise CurveMismatchError(f"curves differ: {a.curve} vs {b.curve}")


def age(e: BundleClass, k: int) -> Fraction:
    if not 0 <= k < e.curve.m:
        raise IndexError(f"stacky point index {k} out of range for {e.curve.m} points")
    r = e.curve.orders[k]
    return Fraction(sum(j * mj for j, mj in enumerate(e.mult[k])), r)


def total_age(e: BundleClass) -> Fraction:
    return e._total_age


def _age_sum(e: BundleClass) -> Fraction:
    total = Fraction(0)
    for row, r in zip(e.mult, e.curve.orders):
        total += Fraction(sum(j * mj for j, mj in enumerate(row)), r)
    return total


def euler_char(e: BundleClass) -> int:
    """Orbifold Riemann-Roch: ``rk*(1-g) + deg - sum of ages``."""
    chi = e.rank * (1 - e.curve.genus) + e.degree - total_age(e)
    assert chi.denominator == 1
    return int(chi)


def pushforward_class(e: BundleClass) -> tuple[int, int]:
    """``(rank, degree)`` of the coarse pushforward.

    Each character ``x^j`` at ``p_k`` loses ``j/r_k`` of degree under
    ``pi_*``; this is coded separately from :func:`age` on purpose.
    """
    loss = Fraction(0)
    for row, r in zip(e.mult, e.curve.orders):
        for j, mj in enumerate(row):
            loss += Fraction(j * mj, r)
    d = e.degree - loss
    if d.denominator != 1:
        raise InvalidClassError(f"pushforward degree {d} is not integral")
    return e.rank, int(d)


# --- constructors ------------------------------------------------------------

def trivial_class(sig: CurveSignature, rank: int = 1) -> BundleClass:
    return BundleClass(sig, rank, Fraction(0),
                       tuple((rank,) + (0,) * (r - 1) for r in sig.orders))


def line_class(p: PicClass) -> BundleClass:
    """The rank-one class of ``pi^*W (x) O(sum i_k/r_k p_k)``."""
    rows = []
    for i, r in zip(p.indices, p.curve.orders):
        row = [0] * r
        row[i] = 1
        rows.append(tuple(row))
    return BundleClass(p.curve, 1, p.total_degree, tuple(rows))


def canonical_class(sig: CurveSignature) -> BundleClass:
    """``K``: degree ``2g-2 + sum (r_k-1)/r_k``, character ``x^{r_k-1}`` at each point."""
    return line_class(PicClass(sig, 2 * sig.genus - 2, tuple(r - 1 for r in sig.orders)))


def direct_sum(a: BundleClass, b: BundleClass) -> BundleClass:
    _check_same(a, b)
    return BundleClass(a.curve, a.rank + b.rank, a.degree + b.degree,
                       tuple(tuple(x + y for x, y in zip(ra, rb))
                             for ra, rb in zip(a.mult, b.mult)))


def from_pushforward(sig: CurveSignature, coarse_degree: int,
                     mult: Sequence[Sequence[int]]) -> BundleClass:
    """Build the class with the given local types and ``deg pi_* = coarse_degree``."""
    rows = tuple(tuple(row) for row in mult)
    if not rows and sig.m:
        raise InvalidClassError("multiplicities required on a curve with stacky points")
    rank = sum(rows[0]) if rows else None
    if rank is None:
        raise InvalidClassError("use trivial_class/line_class for curves without stacky points")
    ages = sum((Fraction(sum(j * x for j, x in enumerate(row)), r)
                for row, r in zip(rows, sig.orders)), Fraction(0))
    return BundleClass(sig, rank, coarse_degree + ages, rows)


def balanced_class(sig: CurveSignature, rank: int, coarse_degree: int) -> BundleClass:
    """Balanced local types: at ``p_k`` write ``rank = a*r_k + b``; characters
    ``0..b-1`` get ``a+1`` and the rest get ``a``."""
    if rank < 1:
        raise OrbitchinError(f"rank must be >= 1, got {rank}")
    rows = []
    for r in sig.orders:
        a, b = divmod(rank, r)
        rows.append(tuple(a + 1 if j < b else a for j in range(r)))
    if not rows:
        return BundleClass(sig, rank, Fraction(coarse_degree), ())
    return from_pushforward(sig, coarse_degree, rows)


# --- representation-ring calculus -------------------------------------------

def _convolve(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    r = len(u)
    out = [0] * r
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                out[(i + j) % r] += ui * vj
    return tuple(out)


def tensor(a: BundleClass, b: BundleClass) -> BundleClass:
    _check_same(a, b)
    return BundleClass(a.curve, a.rank * b.rank, a.rank * b.degree + b.rank * a.degree,
                       tuple(_convolve(ra, rb) for ra, rb in zip(a.mult, b.mult)))


def dual(a: BundleClass) -> BundleClass:
    rows = tuple(tuple(row[(-j) % len(row)] for j in range(len(row))) for row in a.mult)
    return BundleClass(a.curve, a.rank, -a.degree, rows)


def tensor_line(a: BundleClass, line: PicClass) -> BundleClass:
    """``a (x) L``: multiplicities shift cyclically by the index of ``L``."""
    if a.curve != line.curve:
        raise CurveMismatchError(f"curves differ: {a.curve} vs {line.curve}")
    rows = tuple(tuple(row[(j - i) % len(row)] for j in range(len(row)))
                 for row, i in zip(a.mult, line.indices))
    return BundleClass(a.curve, a.rank, a.degree + a.rank * line.total_degree, rows)


def power(a: BundleClass, n: int) -> BundleClass:
    """Tensor power; negative ``n`` uses the dual, ``n = 0`` the trivial line."""
    base = a if n >= 0 else dual(a)
    out = trivial_class(a.curve)
    for _ in range(abs(n)):
        out = tensor(out, base)
    return out


# --- polarizations and slopes -------------------------------------------------

@dataclass(frozen=True)
class Polarization:
    generating: BundleClass
    ample_degree: int = 1

    def __post_init__(self):
        if self.ample_degree < 1:
            raise OrbitchinError(f"ample degree must be >= 1, got {self.ample_degree}")

    @property
    def curve(self) -> CurveSignature:
        return self.generating.curve


def default_polarization(sig: CurveSignature, ample_degree: int = 1) -> Polarization:
    """``E_u = sum_i sum_j O(j/r_i p_i)`` with ``O_X(1)`` of the given degree.

    On a curve with no stacky points ``E_u`` would be zero, so the structure
    sheaf is used instead.
    """
    if not sig.m:
        return Polarization(trivial_class(sig), ample_degree)
    summands = []
    for k, r in enumerate(sig.orders):
        for j in range(r):
            idx = [0] * sig.m
            idx[k] = j
            summands.append(line_class(PicClass(sig, 0, tuple(idx))))
    return Polarization(reduce(direct_sum, summands), ample_degree)


@dataclass(frozen=True)
class ModifiedHilbert:
    """``P(m) = leading*m + constant``."""
    leading: Fraction
    constant: Fraction


def modified_hilbert(e: BundleClass, pol: Polarization) -> ModifiedHilbert:
    _check_same(e, pol.generating)
    leading = Fraction(e.rank * pol.generating.rank * pol.ample_degree)
    constant = Fraction(euler_char(tensor(e, dual(pol.generating))))
    return ModifiedHilbert(leading, constant)


def modified_slope(e: BundleClass, pol: Polarization) -> Fraction:
    p = modified_hilbert(e, pol)
    return p.constant / p.leading


def beta(total: BundleClass, sub: BundleClass, pol: Polarization) -> Fraction:
    """Sign fixed so that ``beta <= 0`` iff ``mu(sub) <= mu(total)``."""
    _check_same(total, sub)
    if sub.rank > total.rank:
        raise OrbitchinError(f"sub rank {sub.rank} exceeds total rank {total.rank}")
    pt, ps = modified_hilbert(total, pol), modified_hilbert(sub, pol)
    return pt.leading * ps.constant - pt.constant * ps.leading


@dataclass(frozen=True)
class ParabolicData:
    weights: tuple[tuple[Fraction, ...], ...]
    par_degree: Fraction
    par_slope: Fraction


def parabolic_data(e: BundleClass, pol: Polarization) -> ParabolicData:
    """Parabolic weights ``alpha_{k,j} = (n_{k,1} + ... + n_{k,j}) / rk(E)``
    read off the generating sheaf, and the parabolic degree/slope of ``pi_* e``."""
    _check_same(e, pol.generating)
    big_r = pol.generating.rank
    weights = []
    for row in pol.generating.mult:
        acc, w = 0, [Fraction(0)]
        for n in row[1:]:
            acc += n
            w.append(Fraction(acc, big_r))
        weights.append(tuple(w))
    _, d = pushforward_class(e)
    par_degree = Fraction(d) + sum(
        (a * mj for w, row in zip(weights, e.mult) for a, mj in zip(w, row)), Fraction(0))
    return ParabolicData(tuple(weights), par_degree, par_degree / e.rank)


def generic_weight_exists(e: BundleClass) -> bool:
    """gcd of the pushforward degree and all multiplicities is one.

    The rank is folded in so that a curve without stacky points reduces to
    the classical ``gcd(r, d) = 1``; with stacky points it changes nothing.
    """
    _, d = pushforward_class(e)
    return reduce(gcd, (x for row in e.mult for x in row), gcd(abs(d), e.rank)) == 1


__all__ = [
    "BundleClass", "Polarization", "ModifiedHilbert", "ParabolicData",
    "age", "total_age", "euler_char", "pushforward_class", "trivial_class", "line_class",
    "canonical_class", "direct_sum", "from_pushforward", "balanced_class", "tensor", "dual",
    "tensor_line", "power", "default_polarization", "modified_hilbert", "modified_slope",
    "beta", "parabolic_data", "generic_weight_exists",
]

"""Dimension bookkeeping for GL/SL Hitchin systems and the SYZ eligibility check."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bundles import BundleClass, balanced_class, generic_weight_exists
from .curve import CurveSignature, canonical_degree, is_hyperbolic
from .errors import DomainError
from .spectral import (Outcome, SpectralVerdict, classify_spectral, hitchin_base_dims,
                       spectral_genus, spectral_stacky_signature)


def _local_defect(e: BundleClass) -> int:
    return sum(e.rank ** 2 - sum(m * m for m in row) for row in e.mult)


def moduli_dim_gl(e: BundleClass) -> int:
    """``r^2(2g-2) + 2 + sum_i (r^2 - sum_k m_{i,k}^2)``."""
    if not is_hyperbolic(e.curve):
        raise DomainError(f"curve ({e.curve}) is not hyperbolic")
    r, g = e.rank, e.curve.genus
    return r * r * (2 * g - 2) + 2 + _local_defect(e)


def moduli_dim_sl(e: BundleClass) -> int:
    if not is_hyperbolic(e.curve):
        raise DomainError(f"curve ({e.curve}) is not hyperbolic")
    r, g = e.rank, e.curve.genus
    return r * r * (2 * g - 2) + 2 - 2 * g + _local_defect(e)


def gamma0_order(g: int, r: int) -> int:
    """Number of ``r``-torsion points of a Jacobian of dimension ``g``."""
    return r ** (2 * g)


@dataclass(frozen=True)
class DimensionReport:
    genus: int
    rank: int
    moduli_gl: int
    moduli_sl: int
    base_gl: int
    base_sl: int
    fiber_gl: int
    fiber_sl: int
    gamma0_order: int

    def __post_init__(self):
        g = self.genus
        assert self.moduli_sl == self.moduli_gl - 2 * g
        assert self.base_sl == self.base_gl - g
        assert self.fiber_sl == self.fiber_gl - g


def dimension_report(sig: CurveSignature, r: int, d: int = 0) -> DimensionReport:
    """Dimensions for the balanced class of rank ``r`` and pushforward degree ``d``.

    The PGL moduli space is a finite quotient of the SL one and has the same
    dimension, so only ``moduli_sl`` is reported.
    """
    if not is_hyperbolic(sig):
        raise DomainError(f"curve ({sig}) is not hyperbolic: deg K = {canonical_degree(sig)}")
    if r < 1:
        raise DomainError(f"rank must be >= 1, got {r}")
    e = balanced_class(sig, r, d)
    base_gl, base_sl = hitchin_base_dims(sig, r)
    fiber = spectral_genus(sig, r)
    return DimensionReport(
        genus=sig.genus, rank=r,
        moduli_gl=moduli_dim_gl(e), moduli_sl=moduli_dim_sl(e),
        base_gl=base_gl, base_sl=base_sl,
        fiber_gl=fiber, fiber_sl=fiber - sig.genus,
        gamma0_order=gamma0_order(sig.genus, r))


def integrable_check(sig: CurveSignature, r: int, d: int = 0) -> bool:
    """``base + fiber == moduli`` for both GL and SL."""
    rep = dimension_report(sig, r, d)
    return (rep.base_gl + rep.fiber_gl == rep.moduli_gl
            and rep.base_sl + rep.fiber_sl == rep.moduli_sl)


class SyzOutcome(str, Enum):
    MIRROR_PARTNERS = "MirrorPartners"
    SINGULAR_SPECTRAL = "SingularSpectral"
    NOT_COVERED = "NotCovered"
    INTEGRALITY_FAILS = "IntegralityFails"

    def __str__(self):
        return self.value


_OUTCOME_MAP = {
    Outcome.INTEGRAL_SMOOTH: SyzOutcome.MIRROR_PARTNERS,
    Outcome.INTEGRAL_SINGULAR: SyzOutcome.SINGULAR_SPECTRAL,
    Outcome.INTEGRALITY_FAILS: SyzOutcome.INTEGRALITY_FAILS,
    Outcome.NOT_COVERED: SyzOutcome.NOT_COVERED,
}


@dataclass(frozen=True)
class SyzVerdict:
    outcome: SyzOutcome
    branch: int
    fired_condition: Optional[str]
    dims: DimensionReport
    generic_weight: bool
    spectral: SpectralVerdict
    spectral_curve: Optional[CurveSignature] = None

    def __post_init__(self):
        if self.outcome is SyzOutcome.MIRROR_PARTNERS:
            assert self.spectral.outcome is Outcome.INTEGRAL_SMOOTH


def syz_check(sig: CurveSignature, r: int, d: int = 0) -> SyzVerdict:
    """Decide whether the SL_r / PGL_r Hitchin systems are covered by the
    mirror-partner theorem, using the traceless spectral classification."""
    if r < 2:
        raise DomainError(f"SYZ check needs rank >= 2, got {r}")
    verdict = classify_spectral(sig, r, traceless=True)
    dims = dimension_report(sig, r, d)
    outcome = _OUTCOME_MAP[verdict.outcome]
    spectral_curve = None
    if outcome is SyzOutcome.MIRROR_PARTNERS:
        if not integrable_check(sig, r, d):
            raise AssertionError(f"dimension identity fails for ({sig}, r={r})")
        spectral_curve = spectral_stacky_signature(sig, r, traceless=True)
    return SyzVerdict(
        outcome=outcome, branch=verdict.branch, fired_condition=verdict.fired_condition,
        dims=dims, generic_weight=generic_weight_exists(balanced_class(sig, r, d)),
        spectral=verdict, spectral_curve=spectral_curve)

"""Local model of a Higgs field near a stacky point.

A fiber ``V = sum V_{l_i}`` of a ``mu_{r_p}``-equivariant bundle is recorded
by the dimensions ``m_i`` of its nonzero isotypic pieces. From these we read
the conjugate partition, the generic vanishing orders of the characteristic
coefficients downstairs (``a~_i``) and upstairs (``a_i = r_p^i t^-i a~_i(t^r_p)``),
and the case split on ``r_p * max(m) - n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FalsificationAlarm, OrbitchinError


@dataclass(frozen=True)
class LocalType:
    order: int
    mults: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if self.order < 2:
            raise OrbitchinError(f"local order must be >= 2, got {self.order}")
        if not self.mults or min(self.mults) < 1:
            raise OrbitchinError(f"multiplicities must be a nonempty list of positive integers")
        if len(self.mults) > self.order:
            raise OrbitchinError(
                f"{len(self.mults)} isotypic pieces but mu_{self.order} has only {self.order} characters")

    @property
    def n(self) -> int:
        return sum(self.mults)

    @property
    def m_max(self) -> int:
        return max(self.mults)

    @property
    def defect(self) -> int:
        """``r_p * max(m) - n``, the generic vanishing order of ``a_n``."""
        return self.order * self.m_max - self.n


def conjugate_partition(t: LocalType) -> tuple[int, ...]:
    """``k_i = #{j : m_j >= m~ - i + 1}`` for ``i = 1..m~`` (ascending order)."""
    mt = t.m_max
    return tuple(sum(1 for m in t.mults if m >= mt - i + 1) for i in range(1, mt + 1))


def generic_orders(t: LocalType) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Generic vanishing orders ``(ord a~_i, ord a_i)`` for ``i = 1..n``.

    ``ord a~_i = v`` on a block of length ``k_{m~-v+1}``, ``v = 1..m~``.
    """
    k = conjugate_partition(t)
    mt = t.m_max
    coarse: list[int] = []
    for v in range(1, mt + 1):
        coarse.extend([v] * k[mt - v])
    orbifold = tuple(t.order * c - i for i, c in enumerate(coarse, start=1))
    return tuple(coarse), orbifold


@dataclass(frozen=True)
class LocalVerdict:
    case: str
    local_type: LocalType
    conjugate: tuple[int, ...]
    coarse_orders: tuple[int, ...]
    orbifold_orders: tuple[int, ...]
    facts: dict = field(default_factory=dict, compare=False)


def _check(cond: bool, t: LocalType, msg: str):
    if not cond:
        raise FalsificationAlarm(f"local type {t}: {msg}")


def classify_local(t: LocalType) -> LocalVerdict:
    """Case split on ``r_p*m~ - n`` with every forced shape re-verified.

    Cases: ``A`` (= 0), ``B1``/``B2`` (= 1 with ``m~ = 1`` / ``m~ > 1``),
    ``C1``/``C2`` (> 1 with the maximum attained more than once / once).
    """
    n, mt, rp, mp = t.n, t.m_max, t.order, len(t.mults)
    conj = conjugate_partition(t)
    coarse, orb = generic_orders(t)
    top = sum(1 for m in t.mults if m == mt)
    below = sum(1 for m in t.mults if m == mt - 1)
    facts: dict = {"n": n, "m_max": mt, "defect": t.defect, "ord_a_n": orb[-1]}
    _check(orb[-1] == t.defect, t, "ord(a_n) differs from r_p*m~ - n")

    if t.defect == 0:
        case = "A"
        _check(mp == rp, t, "m_p != r_p")
        _check(all(m == mt for m in t.mults), t, "partition is not constant")
        _check(conj == (rp,) * mt, t, f"conjugate {conj} != (r_p,...,r_p)")
    elif t.defect == 1 and mt == 1:
        case = "B1"
        _check(mp == n and rp == n + 1, t, "expected m_p = n and r_p = n + 1")
        _check(conj == (n,), t, f"conjugate {conj} != (n)")
    elif t.defect == 1:
        case = "B2"
        _check(mp == rp and n == mp * mt - 1, t, "expected m_p = r_p and n = m_p*m~ - 1")
        _check(top == rp - 1 and below == 1, t, "expected r_p-1 copies of m~ and one of m~-1")
        _check(conj == (rp - 1,) + (rp,) * (mt - 1), t, f"conjugate {conj} != (r_p-1, r_p, ...)")
    elif top > 1:
        case = "C1"
        facts["ord_a_n_minus_1"] = orb[-2]
        _check(orb[-2] > 2 and orb[-1] > 1, t, "expected ord(a_{n-1}) > 2 and ord(a_n) > 1")
    else:
        case = "C2"
        _check(orb[-1] > 1, t, "expected ord(a_n) > 1")
        # for n = 1 there is no a_{n-1}; the characterization is about n >= 2
        if n >= 2:
            vanishes = orb[-2] == 0
            shape = mp == rp and top == 1 and below == rp - 1
            facts["ord_a_n_minus_1"] = orb[-2]
            facts["a_n_minus_1_nonvanishing"] = vanishes
            _check(vanishes == shape, t, "ord(a_{n-1}) = 0 characterization fails")
    return LocalVerdict(case, t, conj, coarse, orb, facts)

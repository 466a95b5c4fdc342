"""Shared generators and brute-force oracles for the test suite."""
import random
from fractions import Fraction
from itertools import combinations_with_replacement

from orbitchin import BundleClass, CurveSignature, from_pushforward


def grid_signatures(max_genus=3, max_points=5, max_order=10):
    """Every signature up to reordering of the stacky points."""
    for g in range(max_genus + 1):
        for m in range(max_points + 1):
            for orders in combinations_with_replacement(range(2, max_order + 1), m):
                yield CurveSignature.from_orders(g, orders)


def random_curve(rng: random.Random, max_genus=3, max_points=4, max_order=6) -> CurveSignature:
    orders = [rng.randint(2, max_order) for _ in range(rng.randint(0, max_points))]
    return CurveSignature.from_orders(rng.randint(0, max_genus), orders)


def random_mult_row(rng: random.Random, rank: int, order: int) -> tuple:
    row = [0] * order
    for _ in range(rank):
        row[rng.randrange(order)] += 1
    return tuple(row)


def random_class(rng: random.Random, sig: CurveSignature, min_rank=1, max_rank=5) -> BundleClass:
    rank = rng.randint(min_rank, max_rank)
    d = rng.randint(-6, 6)
    if not sig.m:
        return BundleClass(sig, rank, Fraction(d), ())
    rows = [random_mult_row(rng, rank, r) for r in sig.orders]
    return from_pushforward(sig, d, rows)


def brute_conjugate(mults) -> tuple:
    """Column lengths of the Young diagram, listed shortest first."""
    cells = {(i, j) for i, m in enumerate(sorted(mults, reverse=True)) for j in range(m)}
    width = max(mults)
    columns = [sum(1 for (_, j) in cells if j == c) for c in range(width)]
    return tuple(reversed(columns))

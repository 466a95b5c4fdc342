"""Check base + fiber = moduli (GL and SL) over random hyperbolic signatures.

Also re-derives the per-point reduction r^2 - sum m^2 = 2 sum_{i>=2} h~_i
by plain summation and prints any counterexample.
"""
import argparse
import random
from dataclasses import dataclass

from orbitchin import CurveSignature, dimension_report, is_hyperbolic


@dataclass
class IdentityConfig:
    samples: int = 2000
    max_genus: int = 4
    max_points: int = 6
    max_order: int = 12
    max_rank: int = 10
    seed: int = 0


def per_point_gap(r: int, rk: int) -> int:
    a, b = divmod(r, rk)
    lhs = r * r - b * (a + 1) ** 2 - (rk - b) * a * a
    rhs = sum(i - -(-i // rk) for i in range(2, r + 1))
    return lhs - 2 * rhs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field, default in vars(IdentityConfig()).items():
        ap.add_argument(f"--{field.replace('_', '-')}", type=int, default=default)
    cfg = IdentityConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)

    gaps = [(r, rk) for r in range(2, cfg.max_rank + 1) for rk in range(2, cfg.max_order + 1)
            if per_point_gap(r, rk)]
    print(f"per-point reduction: {len(gaps)} counterexamples {gaps[:5]}")

    done = bad = 0
    while done < cfg.samples:
        orders = [rng.randint(2, cfg.max_order) for _ in range(rng.randint(0, cfg.max_points))]
        sig = CurveSignature.from_orders(rng.randint(0, cfg.max_genus), orders)
        if not is_hyperbolic(sig):
            continue
        r = rng.randint(2, cfg.max_rank)
        d = dimension_report(sig, r, rng.randint(-10, 10))
        done += 1
        if d.base_gl + d.fiber_gl != d.moduli_gl or d.base_sl + d.fiber_sl != d.moduli_sl:
            bad += 1
            print("identity fails:", sig, r, d)
    print(f"integrable identity: {done} samples, {bad} failures")


if __name__ == "__main__":
    main()

"""Tally spectral-curve verdicts and SYZ outcomes over a grid of signatures.

    python3 scripts/classification_survey.py --max-genus 2 --max-points 4 --max-rank 6
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

from orbitchin import CurveSignature, classify_spectral, is_hyperbolic, syz_check


@dataclass
class SurveyConfig:
    max_genus: int = 2
    max_points: int = 4
    max_order: int = 8
    max_rank: int = 6
    traceless: bool = True


def signatures(cfg: SurveyConfig):
    for g in range(cfg.max_genus + 1):
        for m in range(cfg.max_points + 1):
            for orders in combinations_with_replacement(range(2, cfg.max_order + 1), m):
                sig = CurveSignature.from_orders(g, orders)
                if is_hyperbolic(sig):
                    yield sig


def survey(cfg: SurveyConfig):
    verdicts, syz = Counter(), Counter()
    for sig in signatures(cfg):
        for r in range(2, cfg.max_rank + 1):
            v = classify_spectral(sig, r, cfg.traceless)
            verdicts[(sig.genus, str(v.outcome), v.branch, v.fired_condition)] += 1
            syz[str(syz_check(sig, r).outcome)] += 1
    return verdicts, syz


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=SurveyConfig.max_genus)
    ap.add_argument("--max-points", type=int, default=SurveyConfig.max_points)
    ap.add_argument("--max-order", type=int, default=SurveyConfig.max_order)
    ap.add_argument("--max-rank", type=int, default=SurveyConfig.max_rank)
    ap.add_argument("--full", action="store_true", help="use the full (not traceless) classifier")
    a = ap.parse_args()
    cfg = SurveyConfig(a.max_genus, a.max_points, a.max_order, a.max_rank, not a.full)

    t0 = time.perf_counter()
    verdicts, syz = survey(cfg)
    print(f"{'genus':>5}  {'outcome':<26} {'branch':>6}  {'clause':<22} {'count':>6}")
    for (g, outcome, branch, clause), n in sorted(verdicts.items(), key=lambda kv: (kv[0][0], -kv[1])):
        print(f"{g:>5}  {outcome:<26} {branch:>6}  {str(clause):<22} {n:>6}")
    print()
    for outcome, n in syz.most_common():
        print(f"syz {outcome:<18} {n}")
    print(f"\n{sum(syz.values())} (signature, rank) pairs in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()

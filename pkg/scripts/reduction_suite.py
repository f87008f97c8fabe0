"""Exact gadget decisions against brute-force Clique on small graphs.

    python scripts/reduction_suite.py --max-n 4 --ks 2 3 --ps 2 3 --random 20
"""
from __future__ import annotations

import argparse
import random
import time
from collections import defaultdict
from dataclasses import dataclass

from normmax.gadget import build_gadget, clique_oracle, gadget_normmax
from normmax.instances import all_graphs, random_graph


@dataclass
class SuiteConfig:
    max_n: int = 4
    ks: tuple = (2, 3)
    ps: tuple = (2, 3)
    random_graphs: int = 0
    random_n: int = 5
    seed: int = 0


def graphs(cfg):
    out = [G for n in range(1, cfg.max_n + 1) for G in all_graphs(n)]
    rng = random.Random(cfg.seed)
    out += [random_graph(rng, cfg.random_n) for _ in range(cfg.random_graphs)]
    return out


def run(cfg):
    stats = defaultdict(lambda: [0, 0, 0.0, None, None])  # agree, total, seconds, max NO value, min YES value
    for G in graphs(cfg):
        for k in cfg.ks:
            for p in cfg.ps:
                inst = build_gadget(G, k, p)
                t = time.perf_counter()
                value = gadget_normmax(inst).value
                row = stats[G.n, k, p]
                row[2] += time.perf_counter() - t
                truth = clique_oracle(G, k)
                row[0] += (value >= inst.yes_threshold) == truth
                row[1] += 1
                if truth:
                    row[4] = value / inst.yes_threshold if row[4] is None else min(row[4], value / inst.yes_threshold)
                else:
                    row[3] = value / inst.no_threshold if row[3] is None else max(row[3], value / inst.no_threshold)
    print(f"{'n':>3} {'k':>2} {'p':>2} {'agree':>9} {'sec':>8}  max NO/no_thr  min YES/yes_thr")
    for (n, k, p), (agree, total, secs, no_r, yes_r) in sorted(stats.items()):
        fmt = lambda r: "-" if r is None else f"{float(r):.6f}"
        print(f"{n:>3} {k:>2} {p:>2} {agree:>4}/{total:<4} {secs:8.2f}  {fmt(no_r):>13}  {fmt(yes_r):>15}")
    return all(a == t for a, t, *_ in stats.values())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--ks", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--ps", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--random", type=int, default=0, help="extra random graphs")
    ap.add_argument("--random-n", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = SuiteConfig(a.max_n, tuple(a.ks), tuple(a.ps), a.random, a.random_n, a.seed)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()

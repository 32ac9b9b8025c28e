#!/usr/bin/env python3
"""Benchmark the elimination backends (pure Python vs compiled twin).

Usage:  python bench/bench_elim.py [--repeat N]

Workloads mirror what the library actually does: fraction-free reduced
echelon of integer matrices (Q-side) and reduced echelon mod p.  The cases
span the intertwiner systems and ideal spans seen at corpus scale plus a few
larger ones to show the trend.
"""

import argparse
import random
import time

from strata.kernel import _elim_py

try:
    from strata.kernel import _elim_cy
except ImportError:
    _elim_cy = None


def make_int_matrix(rng, rows, cols, height=9, density=0.7):
    return [
        [rng.randint(-height, height) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]


CASES = [
    ("hom system 64x25", 64, 25),
    ("ideal span 120x40", 120, 40),
    ("induction 300x84", 300, 84),
    ("stress 400x120", 400, 120),
]


def time_call(fn, *args, repeat=3):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(20240)
    print(f"{'case':24} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, rows, cols in CASES:
        m = make_int_matrix(rng, rows, cols)
        t_py, r_py = time_call(_elim_py.echelon_int, m, repeat=args.repeat)
        line = f"{name:24} {t_py:10.4f}"
        if _elim_cy is not None:
            t_cy, r_cy = time_call(_elim_cy.echelon_int, m, repeat=args.repeat)
            assert r_py == r_cy, "backends disagree"
            line += f" {t_cy:13.4f} {t_py / t_cy:7.2f}x"
        else:
            line += f" {'n/a':>13} {'n/a':>8}"
        print(line)
    p = 10007
    for name, rows, cols in CASES:
        m = make_int_matrix(rng, rows, cols)
        t_py, r_py = time_call(_elim_py.echelon_mod, m, p, repeat=args.repeat)
        line = f"{name + ' mod p':24} {t_py:10.4f}"
        if _elim_cy is not None:
            t_cy, r_cy = time_call(_elim_cy.echelon_mod, m, p, repeat=args.repeat)
            assert r_py == r_cy, "backends disagree"
            line += f" {t_cy:13.4f} {t_py / t_cy:7.2f}x"
        else:
            line += f" {'n/a':>13} {'n/a':>8}"
        print(line)


if __name__ == "__main__":
    main()

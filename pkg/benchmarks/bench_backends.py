#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Runs a fixed set of workloads under the current backend; without
``--inner`` it also re-executes itself with ``REDTYPE_PURE=1`` and prints a
comparison table.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""
import argparse
import json
import os
import subprocess
import sys
import time

import redtype as rt


def bench_build_large(repeat):
    gens = (34, 51, 53, 70)
    t0 = time.perf_counter()
    for _ in range(repeat * 50):
        rt.build_semigroup(gens)
    return (time.perf_counter() - t0) / (repeat * 50)


def bench_pf_batch(repeat):
    sems = [
        rt.build_semigroup(g)
        for g in [(8, 11, 12, 13, 15, 17, 18), (12, 13, 14, 15, 16, 19),
                  (40, 65, 78, 90, 91, 110, 117), (7, 15, 18, 29)]
    ]
    t0 = time.perf_counter()
    for _ in range(repeat * 50):
        for H in sems:
            H._pf = None
            rt.pseudo_frobenius(H)
    return (time.perf_counter() - t0) / (repeat * 50)


def bench_enumerate(repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        n = sum(1 for _ in rt.enumerate_by_genus(11))
    assert n == 821
    return (time.perf_counter() - t0) / repeat


def bench_classify_sweep(repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for H in rt.enumerate_by_genus(9):
            if not H.is_full:
                rt.classify(H)
    return (time.perf_counter() - t0) / repeat


WORKLOADS = [
    ("build <34,51,53,70>", bench_build_large),
    ("pseudo-Frobenius batch", bench_pf_batch),
    ("enumerate genus<=11", bench_enumerate),
    ("classify sweep genus<=9", bench_classify_sweep),
]


def run_all(repeat):
    return {name: fn(repeat) for name, fn in WORKLOADS}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    times = run_all(args.repeat)
    if args.inner:
        print(json.dumps({"backend": rt.backend_name(), "times": times}))
        return

    here = {"backend": rt.backend_name(), "times": times}
    env = dict(os.environ, REDTYPE_PURE="1")
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--inner", "--repeat", str(args.repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    pure = json.loads(out.stdout)

    print(f"primary backend: {here['backend']}; fallback: {pure['backend']}")
    if here["backend"] == pure["backend"]:
        print("(compiled extension not built; both runs used the fallback)")
    width = max(len(n) for n, _ in WORKLOADS)
    print(f"{'workload':<{width}}  {'compiled':>12}  {'pure':>12}  {'speedup':>8}")
    for name, _ in WORKLOADS:
        a, b = here["times"][name], pure["times"][name]
        print(f"{name:<{width}}  {a * 1e3:>10.3f}ms  {b * 1e3:>10.3f}ms  {b / a:>7.1f}x")


if __name__ == "__main__":
    main()

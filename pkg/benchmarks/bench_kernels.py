"""Compiled vs pure-Python kernel timings.

Run ``python benchmarks/bench_kernels.py``. Each kernel is timed on inputs of
the size the training loop and evaluator actually see: a 500 x 5 matching
cost, 500 x 5 mask IoU on 64 x 64 masks, RLE of one mask and the greedy
evaluator match over ten IoU thresholds.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from diffinst import _kernels_py, kernels


def cases(rng):
    cost = rng.uniform(size=(500, 5))
    big_cost = rng.uniform(size=(200, 200))
    masks_a = rng.random((500, 64 * 64)) > 0.7
    masks_b = rng.random((5, 64 * 64)) > 0.7
    mask = rng.random((64, 64)) > 0.5
    counts = _kernels_py.rle_encode(mask)
    ious = rng.uniform(size=(100, 5))
    ignore = np.zeros(5, dtype=bool)
    thr = np.round(np.linspace(0.5, 0.95, 10), 2)
    return {
        "linear_assignment 500x5": lambda m: m.linear_assignment(cost),
        "linear_assignment 200x200": lambda m: m.linear_assignment(big_cost),
        "mask_iou_matrix 500x5 @64x64": lambda m: m.mask_iou_matrix(masks_a, masks_b),
        "rle_encode 64x64": lambda m: m.rle_encode(mask),
        "rle_decode 64x64": lambda m: m.rle_decode(counts, 64, 64),
        "greedy_match 100x5 x10": lambda m: m.greedy_match(ious, ignore, thr),
    }


def best_time(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    compiled = kernels.compiled_module()
    if compiled is None:
        print("compiled extension not built; only the Python backend is timed")
    rng = np.random.default_rng(0)
    print(f"{'kernel':32s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, fn in cases(rng).items():
        py = best_time(lambda: fn(_kernels_py), args.repeat)
        if compiled is None:
            print(f"{name:32s} {py * 1e6:10.1f}us")
            continue
        cy = best_time(lambda: fn(compiled), args.repeat)
        print(f"{name:32s} {py * 1e6:10.1f}us {cy * 1e6:10.1f}us {py / cy:7.1f}x")


if __name__ == "__main__":
    main()

"""Compiled kernels vs the numpy fallback on representative inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one row per kernel: best-of-N wall time for each backend and the
speed-up. Both backends are imported directly, so the environment switch
CHEREDNIK_PURE_PYTHON does not matter here.
"""
import argparse
import timeit

import numpy as np

from cherednik import _fallback
from cherednik.algebra import AlgebraParams
from cherednik.field import make_field
from cherednik.reps import RepSpec, build_rep, direct_sum

try:
    from cherednik import _kernels
except ImportError:
    _kernels = None


def tables(ctx):
    return ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t


def cases():
    rng = np.random.default_rng(0)
    F = make_field(11, 2)
    a = rng.integers(0, F.q, size=(40, 40))
    b = rng.integers(0, F.q, size=(40, 40))
    P = AlgebraParams(F, 1, F.gen)
    big = build_rep(RepSpec.make(P, "V11", mu=F.gen + 1, d=F.element(3)))
    gens = np.ascontiguousarray(np.stack([g.data for g in big.generators()]))
    seeds = rng.integers(0, F.q, size=(1, big.dim))

    E = make_field(3, 1)
    Q = AlgebraParams(E, 1, 0)
    small = direct_sum(build_rep(RepSpec.make(Q, "V16", c=1, theta=1)),
                       build_rep(RepSpec.make(Q, "V17", a=0)))
    sg = np.ascontiguousarray(np.stack([g.data for g in small.generators()]))
    units = np.ascontiguousarray(np.stack([small["X"].data, small["Xinv"].data, small["s"].data]))
    V = build_rep(RepSpec.make(Q, "V17", a=0))
    vg = np.ascontiguousarray(np.stack([g.data for g in V.generators()]))
    vu = np.ascontiguousarray(np.stack([V["X"].data, V["Xinv"].data, V["s"].data]))

    return [
        ("matmul 40x40 F_121", lambda k: k.matmul(a, b, F.add_t, F.mul_t)),
        ("rref 40x40 F_121", lambda k: k.rref(a.copy(), *tables(F))),
        ("det 40x40 F_121", lambda k: k.det(a.copy(), *tables(F))),
        ("spin V11 dim 22 F_121", lambda k: k.spin(gens, seeds, *tables(F))),
        ("exhaustive V16+V17 dim 9 F_3", lambda k: k.exhaustive_search(sg, units, E.q, *tables(E))),
        ("exhaustive V17 dim 6 F_3", lambda k: k.exhaustive_search(vg, vu, E.q, *tables(E))),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels are not built; only the fallback is available")
    print(f"{'kernel':32} {'python (ms)':>12} {'cython (ms)':>12} {'speed-up':>9}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:32} {py:12.2f} {'-':>12} {'-':>9}")
            continue
        cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32} {py:12.2f} {cy:12.3f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()

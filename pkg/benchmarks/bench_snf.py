"""Compare the compiled SNF kernel against the pure-Python path.

Run:  python3 benchmarks/bench_snf.py

Times the raw reduction kernels on random integer matrices and on the
boundary matrices arising from independence-complex homology.  The
compiled kernel works in int64 and falls back to the pure path on
overflow, so the table also reports how often each batch overflowed.
Outputs of the two paths are cross-checked for exact equality.
"""

import random
import time

import numpy as np

from regobstruct.exact_linalg import HAVE_COMPILED_KERNEL, ZZ
from regobstruct.exact_linalg.snf_pure import snf_pure
from regobstruct.graph_topology import cycle, independence_complex
from regobstruct.homology_engine import chain_complex

if HAVE_COMPILED_KERNEL:
    from regobstruct._snfcore import snf_int64


def random_batch(rng, count, size, bound=9):
    return [[[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]
            for _ in range(count)]


def boundary_batch():
    out = []
    for n in (9, 10, 11, 12):
        C = chain_complex(independence_complex(cycle(n)), ZZ)
        for d in range(1, C.top + 1):
            M = C.boundary(d)
            if M.nrows and M.ncols:
                out.append(M.to_rows())
    return out


def run_compiled(rows):
    try:
        U, D, V = snf_int64(np.array(rows, dtype=np.int64))
        return U.tolist(), D.tolist(), V.tolist(), False
    except OverflowError:
        U, D, V = snf_pure(rows, len(rows), len(rows[0]))
        return U, D, V, True


def main():
    print(f"compiled kernel available: {HAVE_COMPILED_KERNEL}")
    if not HAVE_COMPILED_KERNEL:
        print("nothing to compare; build the extension first")
        return
    rng = random.Random(2024)
    batches = [
        ("random 10x10", random_batch(rng, 60, 10)),
        ("random 20x20", random_batch(rng, 20, 20)),
        ("random 30x30, small entries", random_batch(rng, 8, 30, bound=2)),
        ("Ind(C_9..C_12) boundaries", boundary_batch()),
    ]
    header = f"{'batch':<30}{'n':>4}{'compiled':>11}{'pure':>11}{'speedup':>9}{'fallback':>10}"
    print(header)
    print("-" * len(header))
    for name, mats in batches:
        t0 = time.perf_counter()
        fast = [run_compiled(rows) for rows in mats]
        t_fast = time.perf_counter() - t0
        t0 = time.perf_counter()
        pure = [snf_pure(rows, len(rows), len(rows[0])) for rows in mats]
        t_pure = time.perf_counter() - t0
        fallbacks = sum(1 for *_, fb in fast if fb)
        for (U, D, V, _), (U2, D2, V2) in zip(fast, pure):
            assert (U, D, V) == (U2, D2, V2), "paths disagree!"
        speed = t_pure / t_fast if t_fast else float("inf")
        print(f"{name:<30}{len(mats):>4}{t_fast:>10.3f}s{t_pure:>10.3f}s"
              f"{speed:>8.1f}x{fallbacks:>7}/{len(mats)}")
    print("\nEnd-to-end check: homology of Ind(C_12) via each path")
    for label, env in (("compiled", False), ("pure", True)):
        t0 = time.perf_counter()
        K = independence_complex(cycle(12))
        import regobstruct.exact_linalg.snf as snf_mod
        saved = snf_mod._snf_int64
        if env:
            snf_mod._snf_int64 = None
        try:
            C = chain_complex(K, ZZ)
            groups = {n: str(C.homology(n).group) for n in range(0, C.top + 1)}
        finally:
            snf_mod._snf_int64 = saved
        print(f"  {label:<9}{time.perf_counter() - t0:8.3f}s   {groups}")


if __name__ == "__main__":
    main()

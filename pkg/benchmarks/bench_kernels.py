"""Compare the numba and numpy kernel backends.

Times the three kernels directly on solvable witness words, then the full
word-synthesis doubling benchmark under each backend.

    python benchmarks/bench_kernels.py [--sizes 500,1000,2000,4000] [--seed 0]
"""
import argparse
import time

import numpy as np

from wmgsynth import kernels
from wmgsynth.bench import bench, word_instance
from wmgsynth.cyclic import canonical_system
from wmgsynth.verify import _dense
from wmgsynth.words import parikh


def time_kernels(backend, words, repeats=3):
    mod = kernels.get_backend(backend)
    rows = []
    for w in words:
        counts = np.asarray(parikh(w).counts, dtype=np.int64)
        sys_ = canonical_system(w)
        consume, produce, m0, word = _dense(sys_, w)
        calls = {
            "first_violation": lambda: mod.first_violation(w.codes, counts),
            "marking_floor": lambda: mod.marking_floor(w.codes, 0, 1, int(counts[0]), int(counts[1])),
            "simulate_cycle": lambda: mod.simulate_cycle(consume, produce, m0, word),
        }
        for fn in calls.values():
            fn()  # compile / warm caches
        best = {}
        for name, fn in calls.items():
            ts = []
            for _ in range(repeats):
                t0 = time.perf_counter()
                fn()
                ts.append(time.perf_counter() - t0)
            best[name] = min(ts)
        rows.append((len(w), best))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="500,1000,2000,4000")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(args.seed)
    words = [word_instance(rng, n) for n in sizes]
    backends = ["numpy"] + (["numba"] if kernels.numba_available() else [])
    if "numba" not in backends:
        print("numba not importable: numpy backend only")

    print(f"{'n':>6} {'kernel':<16}" + "".join(f"{b:>12}" for b in backends))
    results = {b: time_kernels(b, words) for b in backends}
    for i, n in enumerate(sizes):
        for name in ("first_violation", "marking_floor", "simulate_cycle"):
            cells = "".join(f"{results[b][i][1][name] * 1e3:>10.3f}ms" for b in backends)
            print(f"{n:>6} {name:<16}{cells}")

    print()
    for b in backends:
        r = bench("word-synth", sizes, seed=args.seed, backend=b)
        times = ", ".join(f"{t * 1e3:.2f}" for t in r.seconds)
        print(f"word-synth [{b}] ms: {times}  exponent {r.exponent:.2f}")


if __name__ == "__main__":
    main()

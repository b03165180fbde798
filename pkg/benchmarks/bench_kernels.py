"""Time the compiled and numpy elimination kernels on random matrices over F_p.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 0]
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from bblab import linalg
from bblab.complex import f_vector
from bblab.constructions import corpus_complex
from bblab.homology import reduced_betti

SHAPES = [(60, 80), (150, 200), (300, 300), (400, 600)]
PRIMES = [2, 32003]


def bench_rank(repeat: int, seed: int) -> list[tuple]:
    rng = np.random.default_rng(seed)
    rows = []
    for p in PRIMES:
        for m, n in SHAPES:
            A = rng.integers(0, p, size=(m, n), dtype=np.int64)
            ranks = {name: linalg.rank(A, p, backend=name) for name in linalg.BACKENDS}
            assert len(set(ranks.values())) == 1, ranks
            times = {
                name: min(timeit.repeat(lambda: linalg.rank(A, p, backend=name), number=1, repeat=repeat))
                for name in linalg.BACKENDS
            }
            rows.append((p, f"{m}x{n}", ranks["numpy"], times))
    return rows


def bench_homology(repeat: int) -> list[tuple]:
    rows = []
    for name in ("klein_8", "handle_4", "handle_sum_2"):
        K = corpus_complex(name)
        f_vector(K)  # enumerate faces outside the timed region
        t = min(timeit.repeat(lambda: reduced_betti(K, 32003), number=1, repeat=repeat))
        rows.append((name, reduced_betti(K, 32003).entries, t))
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    names = sorted(linalg.BACKENDS)
    print(f"active backend: {linalg.BACKEND}; available: {', '.join(names)}")
    print(f"{'p':>6} {'shape':>8} {'rank':>5} " + " ".join(f"{n + ' ms':>11}" for n in names) + "  speedup")
    for p, shape, r, times in bench_rank(args.repeat, args.seed):
        cells = " ".join(f"{1e3 * times[n]:11.2f}" for n in names)
        speed = f"{times['numpy'] / times['cython']:7.1f}x" if "cython" in times else "      -"
        print(f"{p:>6} {shape:>8} {r:>5} {cells}  {speed}")
    print(f"\nreduced Betti numbers over F_32003 with the {linalg.BACKEND} backend")
    for name, betti, t in bench_homology(args.repeat):
        print(f"  {name:>14}  {betti}  {1e3 * t:8.2f} ms")


if __name__ == "__main__":
    main()

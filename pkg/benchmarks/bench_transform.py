"""Benchmark the compiled transform kernels against the numpy fallback.

Runs multi-level analysis + synthesis round trips on random data with a few
representative banks and prints per-backend timings.  Usage:

    python benchmarks/bench_transform.py [--size 512] [--levels 3] [--repeats 3]
"""

import argparse
import time

import numpy as np

from dirframelets import (
    DirectionMatrix,
    analyze,
    available_backends,
    build_boxspline_bank,
    build_haar_bank,
    synthesize,
)

EX2 = DirectionMatrix.from_rows([[1, 0, -1, 0], [0, 1, 0, -1]])


def time_roundtrip(bank, data, levels, backend, repeats):
    analyze_t = synth_t = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        pyramid = analyze(bank, data, levels, backend=backend)
        mid = time.perf_counter()
        recon = synthesize(bank, pyramid, backend=backend)
        end = time.perf_counter()
        analyze_t = min(analyze_t, mid - start)
        synth_t = min(synth_t, end - mid)
    defect = float(np.max(np.abs(recon - data)))
    return analyze_t, synth_t, defect


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=512)
    parser.add_argument("--levels", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    cases = [
        ("haar d=2", build_haar_bank(2), rng.standard_normal((args.size, args.size))),
        (
            "boxspline ex2 (37 filters)",
            build_boxspline_bank(EX2, "combined"),
            rng.standard_normal((args.size, args.size)),
        ),
        (
            "haar d=3",
            build_haar_bank(3),
            rng.standard_normal((max(args.size // 8, 16),) * 3),
        ),
    ]
    backends = available_backends()
    print(f"backends: {', '.join(backends)}   levels={args.levels}")
    header = f"{'case':<28} {'backend':<10} {'analyze':>10} {'synthesize':>11} {'max |err|':>10}"
    print(header)
    print("-" * len(header))
    for name, bank, data in cases:
        reference = {}
        for backend in backends:
            analyze_t, synth_t, defect = time_roundtrip(
                bank, data, args.levels, backend, args.repeats
            )
            reference[backend] = analyze_t + synth_t
            print(
                f"{name:<28} {backend:<10} {analyze_t * 1e3:>9.1f}ms"
                f" {synth_t * 1e3:>10.1f}ms {defect:>10.2e}"
            )
        if len(backends) == 2:
            speedup = reference["python"] / reference["compiled"]
            print(f"{'':<28} speedup (compiled vs python): {speedup:.1f}x")
    print("done")


if __name__ == "__main__":
    main()

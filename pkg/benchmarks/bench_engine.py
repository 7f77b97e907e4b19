"""Time the compiled kernels against the numpy/pure-Python fallback.

    python3 benchmarks/bench_engine.py [--sizes 16 20 24 26] [--repeat 3]
"""
import argparse
import time

from dompoly import kernels
from dompoly.engine import domination_polynomial, e_statistics
from dompoly.graphio import gnp, generate
from dompoly.sampling import estimate_rk


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 20, 24, 26])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--samples", type=int, default=20_000)
    args = ap.parse_args()
    names = sorted(kernels.BACKENDS)
    print(f"backends available: {', '.join(names)}")
    print(f"{'task':<28}" + "".join(f"{b:>12}" for b in names) + f"{'speedup':>10}")

    def row(label, make):
        times, outs = [], []
        for b in names:
            t, out = best_of(lambda: make(b), args.repeat)
            times.append(t)
            outs.append(out)
        assert all(o == outs[0] for o in outs), f"backends disagree on {label}"
        speed = f"{times[-1] / times[0]:.1f}x" if len(times) == 2 and times[0] > 0 else "-"
        print(f"{label:<28}" + "".join(f"{t * 1000:>10.1f}ms" for t in times) + f"{speed:>10}")

    for n in args.sizes:
        g = gnp(n, 0.3, seed=2026)
        row(f"coefficients G({n},0.3)", lambda b: domination_polynomial(g, backend=b))
    g = gnp(18, 0.3, seed=2026)
    row("E table G(18,0.3), k=9", lambda b: e_statistics(g, 9, backend=b).table)
    star = generate("star", n=100)
    row(f"sampling K_1,99 x{args.samples}", lambda b: estimate_rk(star, 10, args.samples, seed=7, backend=b).hits)


if __name__ == "__main__":
    main()

"""Compare the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Each row times one kernel on both backends (best of ``--repeat``) and checks
that they return identical arrays.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from semirep import kernels
from semirep.bmodules import regular_power
from semirep.groups import named_group


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(seed: int):
    rng = np.random.default_rng(seed)
    a4 = named_group("A4")
    free = regular_power(a4, 2)
    # e_1 in the first copy plus a random basis vector in the second: the
    # orbit has disjoint supports, so its join closure has 2^12 elements
    gen = 1 | 1 << (12 + int(rng.integers(0, 12)))
    orbit = list(free.orbit(gen))
    masks = kernels.join_closure(orbit, free.nbits)
    d4 = named_group("D4")
    perms = [[pw * 4 + pv for pw in p[:4] for pv in p[:4]] for p in d4.permutations[1:]]
    perms20 = [list(p) + list(range(16, 20)) for p in perms]
    return [
        ("join_closure (A4, 2^12 elements)", lambda k: k.join_closure(orbit, free.nbits)),
        ("leq_matrix (4096 masks)", lambda k: k.leq_matrix(masks)),
        ("join_irreducible_flags (4096)", lambda k: k.join_irreducible_flags(masks)),
        ("meet_irreducible_flags (4096)", lambda k: k.meet_irreducible_flags(masks)),
        ("permute_bits (4096 masks)", lambda k: k.permute_bits(masks, free.bit_action[5])),
        ("fixed_patterns (20 bits, D4)", lambda k: k.fixed_patterns(20, perms20)),
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels are not built; only the numpy fallback is available")
    names = sorted(backends, reverse=True)  # python first
    print(f"{'kernel':<36}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in workloads(args.seed):
        times, outs = [], []
        for n in names:
            t, out = best_of(lambda: fn(backends[n]), args.repeat)
            times.append(t)
            outs.append(np.asarray(out))
        same = all(np.array_equal(outs[0], o) for o in outs[1:])
        row = f"{label:<36}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>9.1f}x"
        if not same:
            row += "  MISMATCH"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import timeit

import numpy as np

from ncteleport import kernels
from ncteleport.rindler import alice_rob_state


def _cases():
    rho = alice_rob_state(0.8, 0.5).matrix
    rng = np.random.default_rng(0)
    herm8 = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    herm8 = herm8 + herm8.conj().T
    grid64 = (np.linspace(0, math.pi, 64), np.linspace(0, 2 * math.pi, 64, endpoint=False))
    grid512 = (np.linspace(0, math.pi, 512), np.linspace(0, 2 * math.pi, 512, endpoint=False))
    return {
        "conditional_entropy_grid 64x64": lambda k: k.conditional_entropy_grid(rho, *grid64),
        "conditional_entropy_grid 512x512": lambda k: k.conditional_entropy_grid(rho, *grid512),
        "conditional_entropy_grid 1 point": lambda k: k.conditional_entropy_grid(rho, [1.0], [0.5]),
        "jacobi_eigh 4x4": lambda k: k.jacobi_eigh(rho),
        "jacobi_eigh 8x8": lambda k: k.jacobi_eigh(herm8),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"selected backend: {kernels.BACKEND}; available: {', '.join(backends)}")
    print(f"{'kernel':36s}" + "".join(f"{b:>14s}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in _cases().items():
        times = {}
        for b in backends:
            mod = kernels.get_backend(b)
            number = max(1, int(0.2 / max(timeit.timeit(lambda: fn(mod), number=1), 1e-7)))
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
            times[b] = best
        line = f"{name:36s}" + "".join(f"{times[b] * 1e6:12.1f}us" for b in backends)
        if len(backends) > 1:
            line += f"   {times['python'] / times['cython']:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()

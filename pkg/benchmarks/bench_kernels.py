"""Compare the pure-Python and compiled kernel backends.

Times the raw kernels (fixpoint, collate) and a few end-to-end
enumerations under each backend, printing one CSV row per case.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import sys
import timeit

from prefext import dispatch, oriented_enumerate
from prefext.generators import lower_bound, random_digraph, random_oriented
from prefext.kernel import available_backends, make_kernel, use_backend


def kernel_cases(rng):
    af = random_digraph(48, 0.08, 0.3, seed=11)
    sets = [rng.getrandbits(af.n) for _ in range(2000)]
    pool = [rng.getrandbits(af.n) & rng.getrandbits(af.n) for _ in range(300)]
    ambients = sorted({rng.getrandbits(af.n) for _ in range(8)})

    def fixpoint(backend):
        k = make_kernel(af.out_masks, af.in_masks, backend)
        return lambda: [k.fixpoint(s) for s in sets]

    def collate(backend):
        k = make_kernel(af.out_masks, af.in_masks, backend)
        return lambda: k.collate(pool, ambients)

    return [("fixpoint x2000 (n=48)", fixpoint), ("collate 300x8 (n=48)", collate)]


def enum_cases():
    cases = [
        ("oriented random n=40", lambda: oriented_enumerate(random_oriented(40, 0.12, seed=3))),
        ("auto lowerBound(30,0.5)", lambda: dispatch(lower_bound(30, 0.5))),
        ("auto lowerBound(20,0.75)", lambda: dispatch(lower_bound(20, 0.75))),
        ("auto random n=16 r=1", lambda: dispatch(random_digraph(16, 0.2, 1.0, seed=5))),
    ]

    def wrap(fn):
        def per_backend(backend):
            def run():
                with use_backend(backend):
                    fn()
            return run
        return per_backend

    return [(name, wrap(fn)) for name, fn in cases]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only timing the python kernel", file=sys.stderr)
    rng = random.Random(0)
    print("case," + ",".join(f"{b}_s" for b in backends) + ",speedup")
    for name, make in kernel_cases(rng) + enum_cases():
        times = [min(timeit.repeat(make(b), number=1, repeat=args.repeat)) for b in backends]
        speedup = f"{times[0] / times[-1]:.2f}" if len(times) > 1 else ""
        print(f"{name}," + ",".join(f"{t:.4f}" for t in times) + f",{speedup}")


if __name__ == "__main__":
    main()

"""Time the compiled poset kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --sizes 9 10 11 12
"""

import argparse
import time

import numpy as np

from imbalance import kernels
from imbalance.explorer import _profile_matrix, enumerate_sequences


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench(t, backends, repeat):
    elements = enumerate_sequences(t)
    profiles = _profile_matrix(elements, t)
    rows = []
    reference = None
    for name in backends:
        impl = kernels.get(name)
        t_rel, rel = timed(impl.relation_matrix, profiles, repeat=repeat)
        t_red, cov = timed(impl.transitive_reduction, rel, repeat=repeat)
        t_meet, mt = timed(impl.bound_table, rel, True, repeat=repeat)
        t_join, jt = timed(impl.bound_table, rel, False, repeat=repeat)
        t_mod, hit = timed(impl.modular_violation, rel, mt, jt, repeat=repeat)
        outputs = (rel, cov, mt, jt, hit)
        if reference is None:
            reference = outputs
        else:
            same = all(np.array_equal(a, b) for a, b in zip(reference[:4], outputs[:4])) and reference[4] == hit
            if not same:
                raise SystemExit(f"backend {name} disagrees at t={t}")
        total = t_rel + t_red + t_meet + t_join + t_mod
        rows.append((name, t_rel, t_red, t_meet + t_join, t_mod, total))
    return len(elements), rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[9, 10, 11, 12])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(backends)}")
    print(f"{'t':>3} {'f(t)':>6} {'backend':>8} {'relation':>10} {'reduction':>10} {'glb+lub':>10} {'modular':>10} {'total':>10}")
    for t in args.sizes:
        count, rows = bench(t, backends, args.repeat)
        base = {name: total for name, *_, total in rows}
        for name, a, b, c, d, total in rows:
            print(f"{t:>3} {count:>6} {name:>8} {a:>10.4f} {b:>10.4f} {c:>10.4f} {d:>10.4f} {total:>10.4f}")
        if "python" in base and "cython" in base:
            print(f"{'':>3} {'':>6} {'speedup':>8} {base['python'] / base['cython']:>54.1f}x")


if __name__ == "__main__":
    main()

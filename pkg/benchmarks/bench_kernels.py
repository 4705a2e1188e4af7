"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload calls the kernel functions directly on inputs prepared once,
so the memoization layers in ``characters`` do not hide the difference.
"""

import argparse
import time

from nhstab import _kernels_py
from nhstab import characters as ch
from nhstab.catalog import T, get_space
from nhstab.rootsystem import root_system

try:
    from nhstab import _kernels as _compiled
except ImportError:
    _compiled = None


def freudenthal_case(impl, rs, lam):
    dom = ch.dominant_weights_of(rs, lam)
    pairs, sq = ch._tables(rs)
    return lambda: impl.freudenthal(rs.cartan, lam, dom, rs.positive_roots, pairs, sq, rs.gram_int)


def orbit_case(impl, rs, lam):
    dom = list(ch.dominant_character(rs, lam))
    return lambda: [impl.orbit(rs.cartan, mu) for mu in dom]


def tensor_case(impl, rs, lam, mu):
    weights = ch.weight_list(rs, mu)
    shift = tuple(a + 1 for a in lam)
    return lambda: impl.alternating_accumulate(rs.cartan, weights, shift, 1, {})


def branch_case(impl, space_name, gamma):
    emb = get_space(space_name).embedding
    g = emb.g
    keep = tuple(range(emb.h.semisimple_rank))
    items = [(mu, emb._project_sparse(mu), m) for mu, m in ch.dominant_character(g, gamma).items()]
    images = emb._root_images

    def run():
        acc = {}
        for mu, img, m in items:
            impl.orbit_project(g.cartan, mu, img, images, keep, m, acc)
        return acc
    return run


def workloads(impl):
    e6 = root_system(T("E6"))
    b4 = root_system(T("B4"))
    a4 = root_system(T("A4"))
    return {
        "freudenthal E6 (1,1,0,0,1,1)": freudenthal_case(impl, e6, (1, 1, 0, 0, 1, 1)),
        "freudenthal B4 (3,2,1,2)": freudenthal_case(impl, b4, (3, 2, 1, 2)),
        "orbits E6 (1,1,0,0,0,1)": orbit_case(impl, e6, (1, 1, 0, 0, 0, 1)),
        "tensor A4 (3,1,2,1) x (2,1,1,2)": tensor_case(impl, a4, (3, 1, 2, 1), (2, 1, 1, 2)),
        "branch f4 > so(8), (2,1,0,1)": branch_case(impl, "f4_so8", (2, 1, 0, 1)),
    }


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")
    py = workloads(_kernels_py)
    cy = workloads(_compiled)
    print(f"{'workload':38s} {'python [s]':>11s} {'compiled [s]':>13s} {'speedup':>8s}")
    for name in py:
        if py[name]() != cy[name]():
            raise SystemExit(f"backends disagree on {name}")
        tp = best_time(py[name], args.repeat)
        tc = best_time(cy[name], args.repeat)
        print(f"{name:38s} {tp:11.4f} {tc:13.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()

"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload is run on both backends, results are checked for equality,
and the best wall time of ``--repeat`` runs is reported.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from dmcurves import kernels
from dmcurves.ff import extend, make_field
from dmcurves.kernels.tables import field_tables
from dmcurves.search import _families


@dataclass
class Row:
    workload: str
    numpy_s: float
    cython_s: float | None

    @property
    def speedup(self) -> float | None:
        return None if self.cython_s is None else self.numpy_s / self.cython_s


def best_of(fn, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def _four(F):
    return F.element(4).encode() if F.p != 2 else 0


def workloads():
    # hyperelliptic y^2 = x^5 + 3x + 1 over F_{5^8}
    F = make_field(5, 8)
    tab = field_tables(F)
    f = [1, 3, 0, 0, 0, 1]
    yield "hyperelliptic q=390625", lambda b: b.hyperelliptic_affine(tab, [], f, _four(F))

    # Fermat quartic over F_{3^6}: every point of the affine plane
    K = make_field(3, 6)
    tk = field_tables(K)
    yield "plane quartic q=729", lambda b: b.plane_affine(tk, [1, 1, 1], [4, 0, 0], [0, 4, 0])

    # Hermitian-type curve over F_{2^10}
    H = make_field(2, 10)
    th = field_tables(H)
    yield "plane degree 5 q=1024", lambda b: b.plane_affine(th, [1, 1, 1], [5, 0, 0], [0, 4, 1])

    # genus-2 family scan over F_8 (counts over F_8 and F_64)
    G = make_field(2, 3)
    G2, emb = extend(G, 2)
    args = (field_tables(G), field_tables(G2), emb.code_table())
    fams = _families(G)
    yield "genus-2 scan q=8", lambda b: [b.genus2_scan(*args, fam, 2, _four(G), _four(G2)) for fam in fams]


def normalise(x):
    if isinstance(x, list):
        return sorted(map(normalise, x), key=repr)
    if isinstance(x, tuple):
        return tuple(map(normalise, x))
    return x


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    py, cy = kernels.python_backend, kernels.compiled_backend
    rows = []
    for name, run in workloads():
        t_py, r_py = best_of(lambda: run(py), args.repeat)
        t_cy = None
        if cy is not None:
            t_cy, r_cy = best_of(lambda: run(cy), args.repeat)
            if normalise(r_py) != normalise(r_cy):
                print(f"backends disagree on {name}", file=sys.stderr)
                return 1
        rows.append(Row(name, t_py, t_cy))

    if args.json:
        print(json.dumps([asdict(r) | {"speedup": r.speedup} for r in rows], indent=2))
        return 0
    if cy is None:
        print("compiled kernels not built; numpy timings only")
    print(f"{'workload':28} {'numpy s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        c = "-" if r.cython_s is None else f"{r.cython_s:10.4f}"
        s = "-" if r.speedup is None else f"{r.speedup:7.1f}x"
        print(f"{r.workload:28} {r.numpy_s:10.4f} {c:>10} {s:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

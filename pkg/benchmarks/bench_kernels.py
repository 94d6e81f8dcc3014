"""Time the pure-Python and compiled kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Workloads use symbolic-r data from the family so coefficient growth is
realistic: series products, reversion, and a Bareiss Hankel determinant.
"""

from __future__ import annotations

import argparse
import json
import timeit

from rcbpoly.exactalg import Series
from rcbpoly.family import FamilyContext, central, moment_matrix
from rcbpoly.hankel import hankel_matrix
from rcbpoly.kernels import available_backends


def workloads(order: int):
    ctx = FamilyContext(None, order)
    M = moment_matrix(ctx)
    g, f = M.g._raw, M.f._raw
    rev_in = (Series.x(order) * (1 + Series([0, 0, 1], order) * ctx.param))._raw
    hank = hankel_matrix([central(n) for n in range(17)], 8)
    rows = [[e._c for e in row] for row in hank.rows]
    return {
        "smul": lambda K: K.smul(g, g, order),
        "srevert": lambda K: K.srevert(rev_in, order),
        "det_bareiss 9x9": lambda K: K.det_bareiss([list(r) for r in rows]),
    }


def run(order: int, repeat: int) -> list:
    backends = available_backends()
    out = []
    for name, job in workloads(order).items():
        row = {"workload": name, "order": order}
        results = {}
        for bname, K in backends.items():
            results[bname] = job(K)
            row[bname] = min(timeit.repeat(lambda: job(K), number=1, repeat=repeat))
        if len(set(map(repr, results.values()))) != 1:
            raise AssertionError(f"backends disagree on {name}")
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        out.append(row)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=32)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.order, args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'workload':18} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    for row in rows:
        cy = row.get("cython")
        print(
            f"{row['workload']:18} {row['python']:12.5f} "
            f"{(f'{cy:12.5f}' if cy else 'n/a'):>12} {row.get('speedup', float('nan')):8.2f}"
        )


if __name__ == "__main__":
    main()

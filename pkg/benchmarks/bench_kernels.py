"""Compare the numba and numpy backends of the Z tiling kernels.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --primes 5,7,11 --repeat 5 --json bench.json
"""

from __future__ import annotations

import argparse
import json
import statistics
import time
from dataclasses import asdict, dataclass

from arithsets.zarith import ZSet, admissible_moduli, decide_tile_Z, family_parith_nontile, tile_Zn_exact_cover


@dataclass
class Row:
    case: str
    backend: str
    median_s: float
    result: str


def _time(fn, repeat: int) -> tuple[float, object]:
    out, times = None, []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def automaton_cases(primes):
    for p in primes:
        k = family_parith_nontile(p)
        yield f"automaton prime family p={p} (2^{k.diameter - 1} states)", k
    yield "automaton {0,1,4,5,16,17,20,21} (tile)", ZSet((0, 1, 4, 5, 16, 17, 20, 21))


def exact_cover_sweep(max_el: int, n_max: int, backend: str) -> int:
    tiles = 0
    for mask in range(1 << max_el):
        k = ZSet((0, *[i + 1 for i in range(max_el) if mask >> i & 1]))
        if any(tile_Zn_exact_cover(k, n, backend) is not None for n in admissible_moduli(k, n_max)):
            tiles += 1
    return tiles


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default="5,7,11,13")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sweep-max", type=int, default=9, help="largest element in the exact-cover sweep")
    ap.add_argument("--n-max", type=int, default=48)
    ap.add_argument("--json", default=None)
    args = ap.parse_args(argv)

    # compile outside the timed region
    decide_tile_Z([0, 1, 3], "numba")
    tile_Zn_exact_cover([0, 1, 2], 6, "numba")

    rows: list[Row] = []
    for name, k in automaton_cases([int(p) for p in args.primes.split(",")]):
        for backend in ("numba", "numpy"):
            t, r = _time(lambda: decide_tile_Z(k, backend), args.repeat)
            rows.append(Row(name, backend, t, "tile" if r.is_tile else f"no tile (witness {r.failure_witness})"))
    name = f"exact cover sweep max<={args.sweep_max}, n<={args.n_max}"
    for backend in ("numba", "numpy"):
        t, r = _time(lambda: exact_cover_sweep(args.sweep_max, args.n_max, backend), 1)
        rows.append(Row(name, backend, t, f"{r} tiles"))

    width = max(len(r.case) for r in rows)
    print(f"{'case':<{width}}  {'backend':<7}  {'median s':>10}  result")
    for r in rows:
        print(f"{r.case:<{width}}  {r.backend:<7}  {r.median_s:>10.4f}  {r.result}")
    for i in range(0, len(rows), 2):
        a, b = rows[i], rows[i + 1]
        if a.result != b.result:
            raise SystemExit(f"backends disagree on {a.case}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([asdict(r) for r in rows], fh, indent=2)


if __name__ == "__main__":
    main()

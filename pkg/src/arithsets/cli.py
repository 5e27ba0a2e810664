"""Command-line front end. Every command prints one JSON document.

Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 budget
exhausted.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from . import freegrp as fg
from . import zarith as za
from ._accel import BACKENDS
from .errors import ArithSetsError, BadCertificate, NotPArithmetic, ParseError, SetParseError
from .intpoly import count_unit_circle_roots, cyclotomic_divisors
from .jsonio import SCHEMA_VERSION, dumps, rational

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4


class BudgetExhausted(Exception):
    def __init__(self, payload: dict):
        super().__init__("budget exhausted")
        self.payload = payload


def _parse_ints(text: str, what: str = "list") -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise SetParseError(f"cannot parse {what} {text!r}: {exc}") from None


# ---- Z reports ----


def analysis_report(k: za.ZSet, backend: str | None = None) -> dict:
    p = za.mask_polynomial(k)
    generates = k.generates
    rep: dict = {
        "set": k.to_json(),
        "mask_polynomial": p.to_json(),
        "mask_polynomial_str": str(p),
        "generates": generates,
        "circle_root_count": count_unit_circle_roots(p),
        "cyclotomic_divisors": cyclotomic_divisors(p),
    }
    if generates:
        b, _ = za.is_b_arithmetic(k)
        m = za.is_p_arithmetic(k)
        rep["b_arithmetic"] = b
        rep["p_arithmetic"] = m is not None
        rep["p_arithmetic_witness"] = m
    else:
        rep["b_arithmetic"] = rep["p_arithmetic"] = rep["p_arithmetic_witness"] = None
    rep["coven_meyerowitz"] = za.coven_meyerowitz_report(k).to_json()
    tile = za.decide_tile_Z(k, backend)
    rep["tile"] = tile.to_json()
    rep["newman"] = za.newman_prime_test(k) if _is_prime(len(k)) else None
    rep["consistent"] = _consistent(rep)
    return rep


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def _consistent(rep: dict) -> bool:
    tile = rep["tile"]["is_tile"]
    if rep["generates"]:
        if tile and not rep["p_arithmetic"]:
            return False
        if rep["p_arithmetic"] and not rep["b_arithmetic"]:
            return False
    if tile and not rep["coven_meyerowitz"]["T1"]:
        return False
    if rep["newman"] is not None and rep["newman"] != tile:
        return False
    return True


def cmd_analyze(args) -> dict:
    return {"report": analysis_report(za.parse_set(args.set), args.backend)}


def cmd_cm(args) -> dict:
    k = za.parse_set(args.set)
    return {"set": k.to_json(), "coven_meyerowitz": za.coven_meyerowitz_report(k).to_json()}


def cmd_zn(args) -> dict:
    k = za.parse_set(args.set)
    n = args.n
    out: dict = {"set": k.to_json(), "n": n, "arithmetic": za.is_arithmetic_Zn(k, n)}
    if n % len(k) == 0:
        offsets = za.tile_Zn_exact_cover(k, n, args.backend)
        out["tile"] = {"is_tile": offsets is not None, "offsets": list(offsets) if offsets is not None else None}
    else:
        out["tile"] = {"is_tile": False, "offsets": None, "reason": "|K| does not divide n"}
    return out


def cmd_solve(args) -> dict:
    k = za.parse_set(args.set)
    lo, hi = args.lo, args.hi
    out: dict = {"set": k.to_json(), "mode": args.mode}
    if args.mode == "integral":
        sol = za.integral_periodic_solution(k)
        if sol is None:
            raise NotPArithmetic(f"{k.to_json()} has no nontrivial periodic solution")
        out["period"] = sol.to_json()
        out["window"] = sol.window(lo, hi).to_json()
        out["verification"] = {"cyclic_equations_zero": sol.verify(k)}
    elif args.mode == "from-tile":
        tile = za.decide_tile_Z(k, args.backend)
        if not tile.is_tile:
            raise BadCertificate(f"{k.to_json()} is not a tile; collision at {tile.failure_witness}")
        sol = za.tiling_to_solution(k, tile.certificate)
        out["tile"] = tile.to_json()
        out["period"] = sol.to_json()
        out["window"] = sol.window(lo, hi).to_json()
        out["verification"] = {
            "cyclic_equations_zero": sol.verify(k),
            "values": sorted(set(sol.pattern)),
        }
    else:
        win = za.make_bounded_solution(k, lo, hi)
        res = za.window_residuals(k, win)
        out["window"] = win.to_json()
        out["verification"] = {"max_residual": res, "tol": args.tol, "ok": res < args.tol}
    return out


def cmd_recur(args) -> dict:
    k = za.parse_set(args.set)
    values = _parse_ints(args.init, "initial values")
    win = za.extend_recurrence(k, values, args.lo, args.hi)
    out: dict = {"set": k.to_json(), "initial": values, "window": win.to_json()}
    if args.classify:
        out["boundedness"] = za.classify_boundedness(k, values, tol=args.tol).to_json()
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "x"])
            for n in range(win.lo, win.hi + 1):
                w.writerow([n, str(win[n])])
        out["csv"] = args.csv
    return out


# ---- sweeps ----


def _k3_row(ab, backend):
    a, b = ab
    k = za.ZSet((0, a, b))
    bar, _ = za.is_b_arithmetic(k)
    tile = za.decide_tile_Z(k, backend).is_tile
    pattern = {a % 3, b % 3} == {1, 2}
    return {"set": [0, a, b], "b_arithmetic": bar, "tile": tile, "mod3_pattern": pattern,
            "ok": bar == tile == pattern}


def _k4_row(cba, backend):
    c, b, a = cba
    k = za.ZSet((0, c, b, a))
    if not k.generates:
        return None
    bar, _ = za.is_b_arithmetic(k)
    par = za.is_p_arithmetic(k) is not None
    tile = za.decide_tile_Z(k, backend).is_tile
    ok = bar == par and (par or not tile)
    return {"set": [0, c, b, a], "b_arithmetic": bar, "p_arithmetic": par, "tile": tile, "ok": ok}


def _family_row(k: za.ZSet, label: dict, backend) -> dict:
    m = za.is_p_arithmetic(k)
    tile = za.decide_tile_Z(k, backend).is_tile
    return {**label, "set": k.to_json(), "p_arithmetic": m is not None, "witness": m, "tile": tile,
            "ok": m is not None and not tile}


def cmd_sweep(args) -> dict:
    backend = args.backend
    if args.family == "k3":
        if args.max < 2:
            raise ParseError("--max must be at least 2")
        items = [(a, b) for b in range(2, args.max + 1) for a in range(1, b) if math.gcd(a, b) == 1]
        fn = lambda it: _k3_row(it, backend)  # noqa: E731
    elif args.family == "k4":
        if args.max < 3:
            raise ParseError("--max must be at least 3")
        items = sorted((c, b, a) for a, b, c in combinations(range(args.max, 0, -1), 3))
        fn = lambda it: _k4_row(it, backend)  # noqa: E731
    elif args.family == "prime-family":
        items = _parse_ints(args.primes, "primes")
        fn = lambda p: _family_row(za.family_parith_nontile(p), {"p": p}, backend)  # noqa: E731
    else:
        items = []
        for tok in args.pairs.split(","):
            try:
                p, d = (int(x) for x in tok.split(":"))
            except ValueError:
                raise ParseError(f"bad pair {tok!r}; expected p:d") from None
            items.append((p, d))
        fn = lambda pd: _family_row(za.family_parith_nontile_composite(*pd), {"p": pd[0], "d": pd[1]}, backend)  # noqa: E731
    truncated = args.budget is not None and len(items) > args.budget
    if truncated:
        items = items[: args.budget]
    if args.workers > 1:
        with ThreadPoolExecutor(args.workers) as pool:
            rows = list(pool.map(fn, items))
    else:
        rows = [fn(it) for it in items]
    rows = [r for r in rows if r is not None]
    out = {
        "family": args.family,
        "count": len(rows),
        "violations": [r for r in rows if not r["ok"]],
        "complete": not truncated,
    }
    if args.rows:
        out["rows"] = rows
    if truncated:
        raise BudgetExhausted(out)
    return out


# ---- free groups ----


def _fg_set(args) -> fg.FGSet:
    chosen = [x is not None for x in (args.set, args.ball, args.sphere, args.ball_minus_identity)]
    if sum(chosen) != 1:
        raise ParseError("give exactly one of --set, --ball, --sphere, --ball-minus-identity")
    if args.set is not None:
        return fg.FGSet.parse(args.rank, args.set)
    if args.ball is not None:
        return fg.ball(args.rank, args.ball)
    if args.sphere is not None:
        return fg.sphere(args.rank, args.sphere)
    b = fg.ball(args.rank, args.ball_minus_identity)
    return fg.FGSet(args.rank, b.elements - {fg.IDENTITY})


def cmd_fg(args) -> dict:
    if args.rank < 1:
        raise ParseError("--rank must be positive")
    if args.action == "parity" and args.set is None and args.ball is None and args.sphere is None \
            and args.ball_minus_identity is None:
        k = fg.parity_example_set(args.rank)
    else:
        k = _fg_set(args)
    out: dict = {"action": args.action, "set": k.to_json(), "R": args.R}
    if args.action == "tile":
        t = fg.greedy_tiling(k, args.R)
        out["tiling"] = t.to_json()
        out["verification"] = fg.verify_partial_tiling(k, t.shifts, args.R).to_json()
    elif args.action == "solve":
        if args.mode == "tiling":
            need = args.R + min(len(w) for w in k.elements)
            t = fg.greedy_tiling(k, need)
            patch = fg.tiling_to_solution_fg(k, t, args.R)
        else:
            patch = fg.bounded_nonperiodic_solution(k, args.R)
        rep = fg.verify_solution_patch(k, patch)
        out["patch"] = patch.to_json()
        ver = rep.to_json()
        ver["max_abs"] = rational(patch.max_abs())
        if patch.log:
            ver["all_steps_distinct"] = all(s.distinct for s in patch.log)
            ver["distinct_values_per_sphere"] = fg.distinct_values_on_spheres(patch)
        out["verification"] = ver
    elif args.action == "parity":
        patch = fg.parity_solution(k.rank, args.R)
        out["balanced"] = fg.check_parity_balance(k)
        out["verification"] = fg.verify_solution_patch(k, patch).to_json()
    else:
        budget = args.budget if args.budget is not None else 1_000_000
        res = fg.cover_search(k, args.R, budget)
        out["search"] = res.to_json()
        if res.status == fg.UNKNOWN:
            raise BudgetExhausted(out)
    return out


# ---- plumbing ----


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--stable", action="store_true", help="byte-stable output (sorted keys, no timing)")
    common.add_argument("--budget", type=int, default=None, help="search nodes or sweep items")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--json-indent", type=int, default=None)
    common.add_argument("--backend", choices=BACKENDS, default=None, help="kernel backend for Z tiling")
    common.add_argument("--out", default=None, help="also write the JSON document to this file")

    ap = argparse.ArgumentParser(prog="arithsets", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for a finite set of integers")
    p.add_argument("set")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cm", parents=[common], help="Coven-Meyerowitz conditions")
    p.add_argument("set")
    p.set_defaults(func=cmd_cm)

    p = sub.add_parser("zn", parents=[common], help="the system and tilings over Z_n")
    p.add_argument("set")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_zn)

    p = sub.add_parser("solve", parents=[common], help="a solution window")
    p.add_argument("set")
    p.add_argument("--mode", choices=["integral", "bounded", "from-tile"], default="integral")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=23)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("recur", parents=[common], help="extend initial values by the recurrence")
    p.add_argument("set")
    p.add_argument("--init", required=True, help="comma-separated integers, diam(K) of them")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=30)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--csv", default=None, help="write the window as CSV")
    p.set_defaults(func=cmd_recur)

    p = sub.add_parser("sweep", parents=[common], help="check the equivalences over a family")
    p.add_argument("family", choices=["k3", "k4", "prime-family", "composite-family"])
    p.add_argument("--max", type=int, default=20)
    p.add_argument("--primes", default="5,7,11,13")
    p.add_argument("--pairs", default="2:2,2:3,3:2")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--rows", action="store_true", help="include every row, not only violations")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fg", parents=[common], help="free group constructions")
    p.add_argument("action", choices=["tile", "solve", "parity", "cover"])
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--set", default=None, help='comma-separated words, e.g. "1,a,A,b,B"')
    p.add_argument("--ball", type=int, default=None)
    p.add_argument("--sphere", type=int, default=None)
    p.add_argument("--ball-minus-identity", type=int, default=None)
    p.add_argument("--R", type=int, default=3)
    p.add_argument("--mode", choices=["bounded", "tiling"], default="bounded")
    p.set_defaults(func=cmd_fg)
    return ap


def _emit(doc: dict, args) -> None:
    text = dumps(doc, indent=args.json_indent, stable=args.stable)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        body = args.func(args)
    except ParseError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExhausted as exc:
        body, code = exc.payload, EXIT_BUDGET
        body["error"] = {"type": "BudgetExhausted", "message": str(exc)}
    except ArithSetsError as exc:
        body, code = {"error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_PRECONDITION
    doc = {"v": SCHEMA_VERSION, "command": args.command, **body}
    if not args.stable:
        doc["elapsed_s"] = round(time.perf_counter() - t0, 6)
    _emit(doc, args)
    return code


if __name__ == "__main__":
    sys.exit(main())

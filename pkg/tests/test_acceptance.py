"""Acceptance suite: one PASS/FAIL line per criterion.

Run with pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import time
from itertools import combinations

import pytest

from arithsets.freegrp import (
    IDENTITY,
    SAT,
    FGSet,
    ball,
    bounded_nonperiodic_solution,
    check_parity_balance,
    cover_search,
    greedy_tiling,
    parity_example_set,
    parity_solution,
    sphere,
    verify_partial_tiling,
    verify_solution_patch,
)
from arithsets.intpoly import (
    IntPoly,
    count_unit_circle_roots,
    cyclotomic,
    cyclotomic_divisors,
    numeric_roots,
    poly_divexact,
    trace_polynomial,
)
from arithsets.zarith import (
    ZSet,
    admissible_moduli,
    classify_boundedness,
    coven_meyerowitz_report,
    decide_tile_Z,
    family_parith_nontile,
    family_parith_nontile_composite,
    integral_periodic_solution,
    is_arithmetic_Zn,
    is_b_arithmetic,
    is_p_arithmetic,
    make_bounded_solution,
    mask_polynomial,
    newman_prime_test,
    normalize_set,
    tile_Zn_exact_cover,
    tiling_to_solution,
    window_residuals,
)

RESULTS: list[str] = []
TILES_K3: list[ZSet] = []
TILES_K4: list[ZSet] = []


def report(num: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"
    RESULTS.append(line)
    print(line)


def warm_kernels():
    # compile the numba kernels once so timings measure the algorithms
    decide_tile_Z([0, 1, 3])
    decide_tile_Z([0, 1, 2])
    tile_Zn_exact_cover([0, 1, 2], 6)


@pytest.fixture(scope="module", autouse=True)
def _warm():
    warm_kernels()


def _k3_sets():
    return [ZSet((0, a, b)) for b in range(2, 21) for a in range(1, b) if math.gcd(a, b) == 1]


def _k4_sets():
    out = []
    for c, b, a in sorted((c, b, a) for a, b, c in combinations(range(15, 0, -1), 3)):
        k = ZSet((0, c, b, a))
        if k.generates:
            out.append(k)
    return out


def check_1():
    t0 = time.perf_counter()
    k = ZSet((0, 1, 3, 5, 6))
    p = mask_polynomial(k)
    count = count_unit_circle_roots(p)
    cyc = cyclotomic_divisors(p)
    b, _ = is_b_arithmetic(k)
    m = is_p_arithmetic(k)
    cubic = trace_polynomial(p).compose_neg()
    cubic = cubic if cubic.lc > 0 else -cubic
    roots = sorted((c.value.real for c in numeric_roots(cubic) if abs(c.value.imag) < 1e-9), reverse=True)
    expected = [2.170, 0.311, -1.481]
    close = len(roots) == 3 and all(abs(r - e) < 1e-3 for r, e in zip(roots, expected))
    dt = time.perf_counter() - t0
    ok = count == 4 and cyc == [] and b and m is None and close and dt < 1
    return ok, (f"circle roots={count}, cyclotomic divisors={cyc}, b={b}, p={m}, cubic {cubic} roots="
                f"{[round(r, 4) for r in roots]}, {dt:.3f}s")


def check_2():
    t0 = time.perf_counter()
    bad = []
    TILES_K3.clear()
    sets = _k3_sets()
    for k in sets:
        _, a, b = k.elements
        barith, _ = is_b_arithmetic(k)
        tile = decide_tile_Z(k).is_tile
        pattern = {a % 3, b % 3} == {1, 2}
        if not (barith == tile == pattern):
            bad.append(k.elements)
        if tile:
            TILES_K3.append(k)
    dt = time.perf_counter() - t0
    return not bad and dt < 10, f"{len(sets)} sets, {len(TILES_K3)} tiles, {len(bad)} violations {bad[:3]}, {dt:.2f}s"


def check_3():
    t0 = time.perf_counter()
    bad = []
    TILES_K4.clear()
    sets = _k4_sets()
    for k in sets:
        barith, _ = is_b_arithmetic(k)
        parith = is_p_arithmetic(k) is not None
        if barith != parith:
            bad.append(k.elements)
        if decide_tile_Z(k).is_tile:
            TILES_K4.append(k)
    dt = time.perf_counter() - t0
    return not bad and dt < 60, (f"{len(sets)} generating sets, {len(TILES_K4)} tiles, "
                                 f"{len(bad)} violations {bad[:3]}, {dt:.2f}s")


def check_4():
    bad = []
    fams = [(f"p={p}", family_parith_nontile(p)) for p in (5, 7, 11, 13)]
    fams += [(f"(p,d)=({p},{d})", family_parith_nontile_composite(p, d)) for p, d in ((2, 2), (2, 3), (3, 2))]
    for label, k in fams:
        if is_p_arithmetic(k) is None or decide_tile_Z(k).is_tile:
            bad.append(label)
    p5 = mask_polynomial(family_parith_nontile(5))
    factor_ok = poly_divexact(p5, cyclotomic(6)) == IntPoly([1, 1, 0, 0, 0, 1, 1, 1])
    return not bad and factor_ok, f"{len(fams)} family sets, failures={bad}, p=5 factorization exact={factor_ok}"


def check_5():
    r1 = coven_meyerowitz_report([0, 3, 5, 7, 9])
    ok_b = not r1.T1 and r1.mask_at_one == 5 and r1.prime_power_product == 1
    r2 = coven_meyerowitz_report([0, 2, 3, 5, 6, 8])
    ok_d = r2.T1 and not r2.T2 and not decide_tile_Z([0, 2, 3, 5, 6, 8]).is_tile
    if not TILES_K3:
        check_2()
    if not TILES_K4:
        check_3()
    tiles = TILES_K3 + TILES_K4
    t1_bad = [k.elements for k in tiles if not coven_meyerowitz_report(k).T1]
    ok = ok_b and ok_d and not t1_bad
    return ok, (f"(B): T1={r1.T1} P(1)={r1.mask_at_one} prod={r1.prime_power_product}; "
                f"(D): T1={r2.T1} T2={r2.T2}; T1 on {len(tiles)} tiles, {len(t1_bad)} failures")


def _random_generating(rng: random.Random) -> ZSet:
    while True:
        size = rng.randint(2, 6)
        top = rng.randint(size - 1, 12)
        rest = rng.sample(range(1, top), size - 2) if size > 2 else []
        k = normalize_set([0, top, *rest])
        if k.generates:
            return k


def check_6():
    rng = random.Random(20240611)
    bad = []
    for _ in range(200):
        k = _random_generating(rng)
        m = is_p_arithmetic(k)
        # the smallest modulus above |K| that m divides can exceed 2 max^2 by up to |K|
        bound = 2 * k.diameter**2 + len(k)
        zn = any(is_arithmetic_Zn(k, n) for n in range(len(k) + 1, bound + 1))
        sol = integral_periodic_solution(k)
        sol_ok = sol is not None and sol.verify(k) and any(sol.pattern)
        if not ((m is not None) == zn == sol_ok):
            bad.append(k.elements)
    return not bad, f"200 random generating sets (|K|<=6, max<=12), {len(bad)} violations {bad[:3]}"


def check_7():
    t0 = time.perf_counter()
    bad = []
    total = 0
    for mask in range(1 << 10):
        k = ZSet((0, *[i + 1 for i in range(10) if mask >> i & 1]))
        total += 1
        tile = decide_tile_Z(k).is_tile
        oracle = any(tile_Zn_exact_cover(k, n) is not None for n in admissible_moduli(k, 60))
        if tile != oracle:
            bad.append(k.elements)
    newman_bad = []
    primes = 0
    for mask in range(1 << 12):
        els = (0, *[i + 1 for i in range(12) if mask >> i & 1])
        if len(els) not in (2, 3, 5, 7, 11, 13):
            continue
        primes += 1
        k = ZSet(els)
        if newman_prime_test(k) != decide_tile_Z(k).is_tile:
            newman_bad.append(els)
    dt = time.perf_counter() - t0
    return not bad and not newman_bad, (f"{total} sets vs Z_n oracle: {len(bad)} disagreements; "
                                        f"{primes} prime-size sets vs Newman: {len(newman_bad)}; {dt:.2f}s")


def check_8():
    if not TILES_K3:
        check_2()
    bad = []
    for k in TILES_K3:
        sol = tiling_to_solution(k, decide_tile_Z(k).certificate)
        w = sol.window(-sol.period, 2 * sol.period + k.diameter)
        if not (sol.verify(k) and window_residuals(k, w) == 0.0 and set(sol.pattern) == {len(k) - 1, -1}):
            bad.append(k.elements)
    return not bad, f"{len(TILES_K3)} tiles from criterion 2, {len(bad)} failures"


def check_9():
    a = classify_boundedness([0, 1, 2], [1, 1]).verdict
    b = classify_boundedness([0, 1, 3], [1, 0, 0]).verdict
    w = make_bounded_solution([0, 1, 3, 5, 6], -50, 50)
    res = window_residuals([0, 1, 3, 5, 6], w)
    ok = a == "Bounded" and b == "Unbounded" and res < 1e-9 and max(abs(v) for v in w.values) > 0
    return ok, f"{{0,1,2}}: {a}; {{0,1,3}}: {b}; bounded window residual {res:.2e}"


def check_10():
    t0 = time.perf_counter()
    parts = {}
    b1 = ball(2, 1)
    parts["B1 tiling"] = verify_partial_tiling(b1, greedy_tiling(b1, 3).shifts, 3).ok
    b2 = ball(2, 2)
    parts["B2 tiling"] = verify_partial_tiling(b2, greedy_tiling(b2, 4).shifts, 4).ok
    k = FGSet(2, b2.elements - {IDENTITY})
    patch = bounded_nonperiodic_solution(k, 5)
    parts["bounded patch"] = verify_solution_patch(k, patch).ok and all(s.distinct for s in patch.log)
    k24 = parity_example_set()
    par = parity_solution(2, 5)
    parts["parity 24"] = len(k24) == 24 and check_parity_balance(k24) and verify_solution_patch(k24, par).ok
    parts["parity B1 fails"] = not check_parity_balance(b1) and not verify_solution_patch(b1, par).ok
    parts["cover S1"] = cover_search(sphere(2, 1), 2).status == SAT
    dt = time.perf_counter() - t0
    failed = [name for name, ok in parts.items() if not ok]
    return not failed and dt < 300, f"{len(parts)} checks, failed={failed}, {dt:.2f}s"


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10]


@pytest.mark.parametrize("num", range(1, 11))
def test_criterion(num):
    ok, detail = CHECKS[num - 1]()
    report(num, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    warm_kernels()
    for i, fn in enumerate(CHECKS, 1):
        ok, detail = fn()
        report(i, ok, detail)

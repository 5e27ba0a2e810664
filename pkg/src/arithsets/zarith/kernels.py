"""Integer kernels for tiling questions on Z and Z_n.

Two searches dominate the runtime of the classification sweeps:

* the forced-placement automaton for tilings of ``Z``, whose states are the
  coverage bitmasks of the positions just after the least uncovered integer;
* backtracking exact cover of ``Z_n`` by translates of a set.

Each has a numba kernel and a numpy/Python twin with identical results.
"""

from __future__ import annotations

import numpy as np

from .._accel import njit, resolve_backend

# State masks are int64 and the numba status table has 2**nbits bytes.
MAX_STATE_BITS = 28


def forced_step(state: int, kbits: int) -> tuple[int, int]:
    """One placement of the automaton.

    ``state`` has bit ``j`` set when position ``cursor + 1 + j`` is covered.
    Returns ``(next_state, advance)``, or ``(-1, collision_offset)`` when the
    translate placed at the cursor overlaps existing coverage.
    """
    full = state << 1
    clash = full & kbits
    if clash:
        return -1, (clash & -clash).bit_length() - 1
    u = full | kbits
    t = 0
    while u & 1:
        u >>= 1
        t += 1
    return u >> 1, t


@njit
def _step_nb(state, kbits):
    full = state << 1
    if full & kbits:
        return -1, 0
    u = full | kbits
    t = 0
    while u & 1:
        u >>= 1
        t += 1
    return u >> 1, t


@njit
def _find_cycle_nb(kbits, nbits):
    n_states = 1 << nbits
    # 0 unseen, 1 dead, 2 on the current walk
    status = np.zeros(n_states, dtype=np.int8)
    for start in range(n_states):
        if status[start] != 0:
            continue
        s = start
        while True:
            st = status[s]
            if st == 2:
                return s
            if st == 1:
                break
            status[s] = 2
            nxt, _ = _step_nb(s, kbits)
            if nxt < 0:
                break
            s = nxt
        s = start
        while status[s] == 2:
            status[s] = 1
            nxt, _ = _step_nb(s, kbits)
            if nxt < 0:
                break
            s = nxt
    return -1


def _find_cycle_np(kbits: int, nbits: int) -> int:
    n_states = 1 << nbits
    states = np.arange(n_states, dtype=np.int64)
    full = states << 1
    dead = (full & kbits) != 0
    u = full | kbits
    lowest_zero = ~u & (u + 1)
    t = np.log2(lowest_zero.astype(np.float64)).astype(np.int64)
    nxt = (u >> t) >> 1
    del full, u, lowest_zero, t
    nxt[dead] = n_states
    nxt = np.append(nxt, n_states).astype(np.int32 if nbits < 31 else np.int64)
    # pointer doubling: after 2**L >= n_states + 1 steps every dying orbit sits in the sink
    reach = nxt.copy()
    steps = 1
    while steps < n_states + 1:
        reach = reach[reach]
        steps *= 2
    alive = reach[:n_states] != n_states
    if not alive.any():
        return -1
    s = int(np.argmax(alive))
    seen = set()
    while s not in seen:
        seen.add(s)
        s = int(nxt[s])
    return s


def find_tiling_cycle(kbits: int, nbits: int, backend: str | None = None) -> int:
    """A state on a cycle of the forced automaton, or ``-1`` if every orbit dies.

    The cycle returned is the one entered from the smallest surviving start
    state; both backends agree on it.
    """
    if nbits > MAX_STATE_BITS:
        raise ValueError(f"state space 2**{nbits} exceeds the supported 2**{MAX_STATE_BITS}")
    if resolve_backend(backend) == "numba":
        return int(_find_cycle_nb(np.int64(kbits), np.int64(nbits)))
    return _find_cycle_np(kbits, nbits)


@njit
def _exact_cover_nb(res, n):
    k = res.shape[0]
    covered = np.zeros(n, dtype=np.uint8)
    depth_max = n // k
    shift = np.empty(depth_max + 1, dtype=np.int64)
    choice = np.zeros(depth_max + 1, dtype=np.int64)
    ncov = 0
    d = 0
    pos = 0
    while True:
        if ncov == n:
            return shift[:d].copy()
        while covered[pos]:
            pos += 1
        placed = False
        j = choice[d]
        while j < k:
            t = (pos - res[j]) % n
            ok = True
            for i in range(k):
                if covered[(t + res[i]) % n]:
                    ok = False
                    break
            if ok:
                for i in range(k):
                    covered[(t + res[i]) % n] = 1
                ncov += k
                shift[d] = t
                choice[d] = j + 1
                d += 1
                choice[d] = 0
                placed = True
                break
            j += 1
        if placed:
            continue
        # backtrack
        if d == 0:
            return np.empty(0, dtype=np.int64)
        d -= 1
        t = shift[d]
        for i in range(k):
            covered[(t + res[i]) % n] = 0
        ncov -= k
        pos = 0
        for i in range(n):
            if covered[i] == 0:
                pos = i
                break


def _exact_cover_py(res: list[int], n: int) -> list[int] | None:
    k = len(res)
    covered = [False] * n
    shifts: list[int] = []

    def first_free() -> int:
        return covered.index(False)

    def rec(ncov: int) -> bool:
        if ncov == n:
            return True
        pos = first_free()
        for r in res:
            t = (pos - r) % n
            cells = [(t + x) % n for x in res]
            if any(covered[c] for c in cells):
                continue
            for c in cells:
                covered[c] = True
            shifts.append(t)
            if rec(ncov + k):
                return True
            shifts.pop()
            for c in cells:
                covered[c] = False
        return False

    return shifts if rec(0) else None


def exact_cover_zn(residues, n: int, backend: str | None = None) -> list[int] | None:
    """Shifts ``t`` with ``{t + r mod n}`` partitioning ``Z_n``, or ``None``.

    Always branches on the least uncovered residue and tries set elements in
    the given order. ``residues`` must be distinct mod ``n``.
    """
    res = [int(r) % n for r in residues]
    if n % len(res):
        return None
    if resolve_backend(backend) == "numba":
        out = _exact_cover_nb(np.asarray(res, dtype=np.int64), np.int64(n))
        return [int(x) for x in out] if out.size else None
    return _exact_cover_py(res, n)

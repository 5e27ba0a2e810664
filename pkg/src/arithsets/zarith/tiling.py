"""Tilings of Z and Z_n by translates of a finite set."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import BadCertificate, BadModulus, BadParameters
from . import kernels
from .sets import ZSet, as_zset


@dataclass(frozen=True)
class TileResultZ:
    is_tile: bool
    period: int | None = None
    offsets: tuple[int, ...] | None = None
    failure_witness: int | None = None

    @property
    def certificate(self) -> tuple[int, tuple[int, ...]] | None:
        return (self.period, self.offsets) if self.is_tile else None

    def to_json(self) -> dict:
        return {
            "is_tile": self.is_tile,
            "certificate": {"n": self.period, "offsets": list(self.offsets)} if self.is_tile else None,
            "failure_witness": self.failure_witness,
        }


def verify_Zn_partition(k, n: int, offsets) -> bool:
    """True iff ``offsets + k`` covers every residue mod ``n`` exactly once."""
    k = as_zset(k)
    seen = [0] * n
    for c in offsets:
        for s in k.elements:
            seen[(c + s) % n] += 1
    return all(v == 1 for v in seen)


def _greedy_collision(kbits: int) -> int | None:
    """Collision position of the automaton started on the empty half-line."""
    state, cursor, seen = 0, 0, set()
    while state not in seen:
        seen.add(state)
        nxt, adv = kernels.forced_step(state, kbits)
        if nxt < 0:
            return cursor + adv
        state, cursor = nxt, cursor + adv
    return None


def decide_tile_Z(k, backend: str | None = None) -> TileResultZ:
    """Decide whether translates of ``k`` partition Z.

    Every tiling of Z, cut at any point, continues by a forced rule: the
    translate covering the least uncovered integer has its minimum there.
    The rule is a function on coverage masks of the next ``diam - 1``
    positions, so a tiling exists iff that function has a cycle. A cycle
    yields the certificate ``(n, C)`` with ``C + k`` partitioning ``Z_n``,
    re-verified before returning.

    For non-tiles ``failure_witness`` is where the automaton started on the
    empty half-line first collides.
    """
    k = as_zset(k)
    if k.diameter == 0:
        return TileResultZ(True, 1, (0,))
    g = math.gcd(*k.elements)
    if g > 1:
        # g K' tiles Z iff K' does; blow the certificate up residue by residue
        r = decide_tile_Z(ZSet(tuple(s // g for s in k.elements)), backend)
        if not r.is_tile:
            return TileResultZ(False, failure_witness=_greedy_collision(sum(1 << s for s in k.elements)))
        offsets = tuple(sorted(g * c + j for c in r.offsets for j in range(g)))
        return TileResultZ(True, g * r.period, offsets)
    d = k.diameter
    if d - 1 > kernels.MAX_STATE_BITS:
        raise BadParameters(f"diameter {d} is beyond the automaton limit of {kernels.MAX_STATE_BITS + 1}")
    kbits = sum(1 << s for s in k.elements)
    cycle_state = kernels.find_tiling_cycle(kbits, d - 1, backend)
    if cycle_state < 0:
        return TileResultZ(False, failure_witness=_greedy_collision(kbits))
    placements, cursor, state = [], 0, cycle_state
    while True:
        placements.append(cursor)
        state, adv = kernels.forced_step(state, kbits)
        cursor += adv
        if state == cycle_state:
            break
    n = cursor
    offsets = tuple(sorted(placements))
    if not verify_Zn_partition(k, n, offsets):
        raise BadCertificate(f"automaton produced an invalid certificate {(n, offsets)} for {k.elements}")
    return TileResultZ(True, n, offsets)


def tile_Zn_exact_cover(k, n: int, backend: str | None = None) -> tuple[int, ...] | None:
    """Offsets ``C`` with ``C + k`` partitioning ``Z_n``, or ``None`` if none exist."""
    k = as_zset(k)
    if len({s % n for s in k.elements}) != len(k):
        raise BadModulus(f"elements of {list(k.elements)} collide modulo {n}")
    if n % len(k):
        raise BadModulus(f"|K| = {len(k)} does not divide n = {n}")
    shifts = kernels.exact_cover_zn(k.elements, n, backend)
    return None if shifts is None else tuple(sorted(shifts))


def admissible_moduli(k, n_max: int) -> list[int]:
    k = as_zset(k)
    return [n for n in range(len(k), n_max + 1, len(k)) if len({s % n for s in k.elements}) == len(k)]


def tiles_some_Zn(k, n_max: int, backend: str | None = None) -> tuple[int, tuple[int, ...]] | None:
    """First admissible ``n <= n_max`` for which ``k`` tiles ``Z_n``."""
    for n in admissible_moduli(k, n_max):
        c = tile_Zn_exact_cover(k, n, backend)
        if c is not None:
            return n, c
    return None

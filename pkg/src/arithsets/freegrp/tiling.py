"""Greedy tilings of F_k by left translates of a connected set."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NoValidShift, NotConnected
from .words import FGSet, IDENTITY, Word, ball_words, format_word, inv, is_connected, letters, mul, shortlex_key


@dataclass(frozen=True)
class PartialTiling:
    """Disjoint left translates ``h K`` of ``base``, in the order they were chosen."""

    base: FGSet
    shifts: tuple[Word, ...]
    radius: int

    def cells(self) -> dict[Word, int]:
        """Map from each covered element to the index of its translate."""
        out = {}
        for i, h in enumerate(self.shifts):
            for w in self.base.elements:
                out[mul(h, w)] = i
        return out

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "radius": self.radius,
            "shifts": [format_word(h) for h in self.shifts],
        }


@dataclass(frozen=True)
class TilingReport:
    ok: bool
    translates: int
    covered: int
    violation: dict | None = field(default=None)

    def to_json(self) -> dict:
        return {"ok": self.ok, "translates": self.translates, "covered": self.covered, "violation": self.violation}


def greedy_tiling(k: FGSet, radius: int) -> PartialTiling:
    """Cover the ball of radius ``radius`` with disjoint translates of ``k``.

    Repeatedly takes the shortlex-least element ``z`` outside the union and
    adds ``h = z w^-1`` for the shortlex-first ``w`` in ``k`` that keeps the
    translates disjoint. If ``k`` misses the identity it is first moved by
    ``w0^-1`` (``w0`` its shortlex-least element); shifts are reported for
    the original ``k``.
    """
    if not k.elements:
        raise ValueError("empty set")
    if not is_connected(k):
        raise NotConnected("the greedy tiler needs a connected set")
    w0 = IDENTITY if IDENTITY in k else min(k.elements, key=shortlex_key)
    base = k.left_translate(inv(w0)).sorted()
    union = set(base)
    shifts = [IDENTITY]
    for z in ball_words(k.rank, radius):
        if z in union:
            continue
        for w in base:
            h = mul(z, inv(w))
            cells = [mul(h, x) for x in base]
            if union.isdisjoint(cells):
                union.update(cells)
                shifts.append(h)
                break
        else:
            raise NoValidShift(f"no disjoint translate covers {format_word(z)}")
    return PartialTiling(k, tuple(mul(h, inv(w0)) for h in shifts), radius)


def verify_partial_tiling(k: FGSet, shifts, radius: int) -> TilingReport:
    """Check disjointness, the distance-one chain condition and coverage of the ball."""
    owner: dict[Word, int] = {}
    alphabet = letters(k.rank)
    for i, h in enumerate(shifts):
        cells = [mul(h, w) for w in k.elements]
        for c in cells:
            if c in owner:
                return TilingReport(False, len(shifts), len(owner), {
                    "kind": "overlap", "translates": [owner[c], i], "element": format_word(c)})
        if i > 0 and not any(mul(c, (a,)) in owner for c in cells for a in alphabet):
            return TilingReport(False, len(shifts), len(owner), {"kind": "not_adjacent", "translate": i})
        for c in cells:
            owner[c] = i
    for z in ball_words(k.rank, radius):
        if z not in owner:
            return TilingReport(False, len(shifts), len(owner), {"kind": "uncovered", "element": format_word(z)})
    return TilingReport(True, len(shifts), len(owner))

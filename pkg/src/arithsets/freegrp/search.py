"""Bounded search for disjoint covers of a ball by left translates."""

from __future__ import annotations

from dataclasses import dataclass

from .words import FGSet, Word, ball_words, format_word, inv, mul

SAT, UNSAT, UNKNOWN = "SAT", "UNSAT", "UNKNOWN"


@dataclass(frozen=True)
class CoverResult:
    status: str
    shifts: tuple[Word, ...] | None
    nodes: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "shifts": [format_word(h) for h in self.shifts] if self.shifts is not None else None,
            "nodes": self.nodes,
        }


def cover_search(t: FGSet, radius: int, budget: int = 1_000_000) -> CoverResult:
    """Look for pairwise disjoint translates ``h t`` covering the ball ``B_radius``.

    Always branches on the shortlex-least uncovered element ``x`` of the
    ball, trying ``h = x w^-1`` for ``w`` in shortlex order. Translates may
    stick out of the ball but must stay disjoint everywhere. ``UNSAT`` means
    the search space was exhausted; ``UNKNOWN`` that ``budget`` placements
    were tried first.
    """
    if not t.elements:
        raise ValueError("empty set")
    target = ball_words(t.rank, radius)
    elems = t.sorted()
    covered: set[Word] = set()
    shifts: list[Word] = []
    nodes = 0

    class _Budget(Exception):
        pass

    def rec(pos: int) -> bool:
        nonlocal nodes
        while pos < len(target) and target[pos] in covered:
            pos += 1
        if pos == len(target):
            return True
        x = target[pos]
        for w in elems:
            h = mul(x, inv(w))
            cells = [mul(h, y) for y in elems]
            if not covered.isdisjoint(cells):
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            covered.update(cells)
            shifts.append(h)
            if rec(pos + 1):
                return True
            shifts.pop()
            covered.difference_update(cells)
        return False

    try:
        found = rec(0)
    except _Budget:
        return CoverResult(UNKNOWN, None, nodes - 1)
    return CoverResult(SAT if found else UNSAT, tuple(shifts) if found else None, nodes)

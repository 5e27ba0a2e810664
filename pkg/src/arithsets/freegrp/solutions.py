"""Finite patches of solutions of A(K) on balls of F_k.

The equation attached to ``g`` has cells ``{w g : w in K}``; a patch on the
ball ``B_R`` is checked on every ``g`` whose cells all lie in ``B_R``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BadParameters, HypothesesViolated, InsufficientCoverage
from ..jsonio import rational
from .tiling import PartialTiling
from .words import FGSet, IDENTITY, Word, ball, ball_words, format_word, is_connected, mul, shortlex_key, sphere_words


@dataclass(frozen=True)
class StepLog:
    index: int
    g: Word
    fresh: int
    designated: Word | None
    value: Fraction | None
    distinct: bool

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "g": format_word(self.g),
            "fresh": self.fresh,
            "designated": format_word(self.designated) if self.designated is not None else None,
            "value": rational(self.value) if self.value is not None else None,
            "distinct": self.distinct,
        }


@dataclass
class SolutionPatch:
    rank: int
    radius: int
    assignment: dict
    kind: str = ""
    log: list = field(default_factory=list)

    def max_abs(self) -> Fraction:
        return max((abs(v) for v in self.assignment.values()), default=Fraction(0))

    def to_json(self) -> dict:
        words = sorted(self.assignment, key=shortlex_key)
        out = {
            "rank": self.rank,
            "radius": self.radius,
            "kind": self.kind,
            "values": {format_word(w): rational(self.assignment[w]) for w in words},
        }
        if self.log:
            out["log"] = [s.to_json() for s in self.log]
        return out


@dataclass(frozen=True)
class PatchReport:
    ok: bool
    checked: int
    failures: int
    first_failure: dict | None
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "degenerate": self.degenerate,
        }


def verify_solution_patch(k: FGSet, patch: SolutionPatch) -> PatchReport:
    """Check every equation of A(k) whose cells lie inside the patch's ball."""
    elems = k.sorted()
    reach = patch.radius + min(len(w) for w in elems)
    checked = failures = 0
    first = None
    for g in ball_words(k.rank, reach):
        cells = [mul(w, g) for w in elems]
        if any(len(c) > patch.radius for c in cells):
            continue
        checked += 1
        total = sum((Fraction(patch.assignment[c]) for c in cells), Fraction(0))
        if total != 0:
            failures += 1
            if first is None:
                first = {"g": format_word(g), "sum": rational(total)}
    degenerate = all(v == 0 for v in patch.assignment.values())
    return PatchReport(failures == 0, checked, failures, first, degenerate)


def tiling_to_solution_fg(k: FGSet, tiling: PartialTiling, radius: int) -> SolutionPatch:
    """Two-level patch ``x_g = |K| - 1`` if ``g^-1`` is a shift, else ``-1``.

    Shifts of norm at most ``radius`` are final once the tiling covers the
    ball of radius ``radius + min |w|``.
    """
    if len(k) < 2:
        raise BadParameters("|K| = 1 only has the trivial solution")
    if tiling.base.elements != k.elements:
        raise BadParameters("tiling is for a different set")
    need = radius + min(len(w) for w in k.elements)
    cells = tiling.cells()
    if any(z not in cells for z in ball_words(k.rank, need)):
        raise InsufficientCoverage(f"tiling must cover the ball of radius {need}")
    shifts = set(tiling.shifts)
    top = Fraction(len(k) - 1)
    values = {}
    for g in ball_words(k.rank, radius):
        ginv = tuple(-x for x in reversed(g))
        values[g] = top if ginv in shifts else Fraction(-1)
    return SolutionPatch(k.rank, radius, values, kind="tiling")


def check_bounded_hypotheses(k: FGSet) -> None:
    if k.rank < 2:
        raise HypothesesViolated("needs rank >= 2")
    if IDENTITY in k:
        raise HypothesesViolated("K must not contain the identity")
    missing = [w for w in ball_words(k.rank, 2) if w and w not in k]
    if missing:
        raise HypothesesViolated(f"K must contain B_2 minus the identity; missing {format_word(missing[0])}")
    if not is_connected(FGSet(k.rank, k.elements | {IDENTITY})):
        raise HypothesesViolated("K together with the identity must be connected")


def bounded_nonperiodic_solution(k: FGSet, radius: int) -> SolutionPatch:
    """Inductive solution of A(k) on the ball of radius ``radius``.

    Equations are taken in shortlex order of ``g``. Each one assigns its
    unassigned cells: the shortlex-first of largest norm gets a value of the
    form ``1/j`` (starting at ``j = index + 3``) that no earlier cell uses, and
    the others share the remaining balance equally. The per-step log records
    whether that value was new.
    """
    check_bounded_hypotheses(k)
    elems = k.sorted()
    values: dict[Word, Fraction] = {}
    used: set[Fraction] = set()
    log: list[StepLog] = []
    for idx, g in enumerate(ball_words(k.rank, radius)):
        cells = [mul(w, g) for w in elems]
        fresh = sorted({c for c in cells if c not in values}, key=shortlex_key)
        total = sum((values[c] for c in cells if c in values), Fraction(0))
        if not fresh:
            if total != 0:
                raise ArithmeticError(f"equation at {format_word(g)} is already violated")
            log.append(StepLog(idx, g, 0, None, None, True))
            continue
        top = max(len(c) for c in fresh)
        designated = next(c for c in fresh if len(c) == top)
        others = [c for c in fresh if c != designated]
        if not others:
            val = -total
            distinct = val not in used
        else:
            j = idx + 3
            while True:
                val = Fraction(1, j)
                rest = -(total + val) / len(others)
                if val not in used and val != rest:
                    break
                j += 1
            distinct = True
            for c in others:
                values[c] = rest
            used.add(rest)
        values[designated] = val
        used.add(val)
        log.append(StepLog(idx, g, len(fresh), designated, val, distinct))
    patch_values = {w: values[w] for w in ball_words(k.rank, radius)}
    return SolutionPatch(k.rank, radius, patch_values, kind="bounded_nonperiodic", log=log)


def distinct_values_on_spheres(patch: SolutionPatch) -> dict[int, int]:
    """Number of distinct values on each sphere of the patch."""
    out: dict[int, set] = {}
    for w, v in patch.assignment.items():
        out.setdefault(len(w), set()).add(v)
    return {r: len(vs) for r, vs in sorted(out.items())}


def parity_solution(rank: int, radius: int) -> SolutionPatch:
    """``x_g = 1`` for odd ``|g|`` and ``-1`` for even ``|g|``."""
    vals = {w: Fraction(1 if len(w) % 2 else -1) for w in ball_words(rank, radius)}
    return SolutionPatch(rank, radius, vals, kind="parity")


def check_parity_balance(k: FGSet) -> bool:
    """True iff ``k`` has as many odd-norm as even-norm elements.

    Since ``|w g|`` and ``|w| + |g|`` have the same parity, this is exactly
    when the parity patch solves A(k).
    """
    odd = sum(1 for w in k.elements if len(w) % 2)
    return 2 * odd == len(k)


def parity_example_set(rank: int = 2, extra: int = 8) -> FGSet:
    """``B_2`` minus the identity plus the first ``extra`` words of the sphere of radius 3."""
    core = [w for w in ball(rank, 2).sorted() if w]
    return FGSet(rank, frozenset(core + sphere_words(rank, 3)[:extra]))

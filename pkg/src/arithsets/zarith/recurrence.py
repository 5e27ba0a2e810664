"""Solutions of the homogeneous system ``sum_i x[g + s_i] = 0`` over Z.

Exact rational windows come from the two-sided recurrence; numeric windows
and the boundedness classifier use the root basis of the mask polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import BadCertificate, NotBArithmetic, WrongInitialCount
from ..exactlin import circulant_from_set, clear_denominators, kernel_basis
from ..intpoly import count_unit_circle_roots, numeric_roots
from ..jsonio import rational
from .sets import as_zset, is_b_arithmetic, is_p_arithmetic, mask_polynomial
from .tiling import verify_Zn_partition

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SequenceWindow:
    """Values ``x[lo], ..., x[hi]`` of a bi-infinite sequence."""

    lo: int
    hi: int
    values: tuple

    def __post_init__(self):
        if self.hi - self.lo + 1 != len(self.values):
            raise ValueError("window length does not match its bounds")

    def __getitem__(self, n: int):
        if not self.lo <= n <= self.hi:
            raise IndexError(n)
        return self.values[n - self.lo]

    @property
    def exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.values)

    def to_json(self) -> dict:
        vals = [rational(v) if isinstance(v, (int, Fraction)) else float(v) for v in self.values]
        return {"lo": self.lo, "hi": self.hi, "values": vals}


def window_residuals(k, window: SequenceWindow) -> float:
    """Largest relative residual over the equations supported in the window.

    Exact windows give ``0.0`` when every equation holds.
    """
    k = as_zset(k)
    worst = 0.0
    for g in range(window.lo, window.hi - k.diameter + 1):
        cells = [window[g + s] for s in k.elements]
        total = sum(cells)
        if window.exact:
            if total != 0:
                return float("inf")
            continue
        scale = sum(abs(c) for c in cells) or 1.0
        worst = max(worst, abs(total) / scale)
    return worst


def extend_recurrence(k, initial: Sequence, lo: int, hi: int) -> SequenceWindow:
    """The unique solution with ``x[0..diam-1] = initial``, restricted to ``[lo, hi]``.

    Forward: ``x[n] = -sum_{i < k-1} x[n - diam + s_i]``; backward:
    ``x[n] = -sum_{i >= 1} x[n + s_i]``. Arithmetic is exact.
    """
    k = as_zset(k)
    d = k.diameter
    if len(initial) != d:
        raise WrongInitialCount(f"need {d} initial values, got {len(initial)}")
    if lo > hi:
        raise ValueError("empty window")
    x = {i: Fraction(v) for i, v in enumerate(initial)}
    head, tail = k.elements[:-1], k.elements[1:]
    for n in range(d, hi + 1):
        x[n] = -sum((x[n - d + s] for s in head), Fraction(0))
    for n in range(-1, lo - 1, -1):
        x[n] = -sum((x[n + s] for s in tail), Fraction(0))
    return SequenceWindow(lo, hi, tuple(x[n] if n in x else Fraction(0) for n in range(lo, hi + 1)))


@dataclass(frozen=True)
class RootTerm:
    root: complex
    power: int
    on_circle: bool
    coefficient: complex

    def to_json(self) -> dict:
        return {
            "root": {"re": self.root.real, "im": self.root.imag},
            "power": self.power,
            "modulus_class": "on_circle" if self.on_circle else "off_circle",
            "coefficient": {"re": self.coefficient.real, "im": self.coefficient.imag},
        }


@dataclass(frozen=True)
class BoundednessReport:
    verdict: str  # "Bounded" | "Unbounded" | "Inconclusive"
    root_data: tuple[RootTerm, ...] = field(default_factory=tuple)
    max_unbounded_coefficient: float = 0.0
    tol: float = DEFAULT_TOL

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "tol": self.tol,
            "max_unbounded_coefficient": self.max_unbounded_coefficient,
            "root_data": [t.to_json() for t in self.root_data],
        }


def _circle_flags(clusters, circle_count: int) -> list[bool]:
    # the exact count decides how many of the numerically closest roots lie on the circle
    order = sorted(range(len(clusters)), key=lambda i: abs(abs(clusters[i].value) - 1.0))
    on = set(order[:circle_count])
    return [i in on for i in range(len(clusters))]


def _root_basis(k):
    p = mask_polynomial(k)
    clusters = numeric_roots(p)
    flags = _circle_flags(clusters, count_unit_circle_roots(p))
    terms = [(c.value, j, flag) for c, flag in zip(clusters, flags) for j in range(c.multiplicity)]
    return terms


def classify_boundedness(k, initial: Sequence, tol: float = DEFAULT_TOL) -> BoundednessReport:
    """Classify the recurrence solution with the given initial values.

    Writes ``x[n] = sum_j b_j n**p_j alpha_j**n`` over the roots of the mask
    polynomial. The solution is bounded iff every term that grows (roots off
    the unit circle, or ``p_j >= 1``) has ``b_j = 0``. The largest such
    ``|b_j|`` is compared against ``tol``; values in ``[tol, 10 tol]`` give
    ``Inconclusive``.
    """
    k = as_zset(k)
    d = k.diameter
    if len(initial) != d:
        raise WrongInitialCount(f"need {d} initial values, got {len(initial)}")
    if d == 0:
        return BoundednessReport("Bounded", (), 0.0, tol)
    terms = _root_basis(k)
    n = np.arange(d, dtype=float)
    basis = np.column_stack([n**p * np.asarray(alpha, dtype=complex) ** n for alpha, p, _ in terms])
    rhs = np.array([float(Fraction(v)) for v in initial], dtype=complex)
    coeffs = np.linalg.solve(basis, rhs)
    root_data = tuple(RootTerm(alpha, p, on, complex(b)) for (alpha, p, on), b in zip(terms, coeffs))
    growing = [abs(t.coefficient) for t in root_data if not t.on_circle or t.power > 0]
    worst = max(growing, default=0.0)
    if worst < tol:
        verdict = "Bounded"
    elif worst <= 10 * tol:
        verdict = "Inconclusive"
    else:
        verdict = "Unbounded"
    return BoundednessReport(verdict, root_data, float(worst), tol)


def make_bounded_solution(k, lo: int, hi: int) -> SequenceWindow:
    """Real window of ``x[n] = Re sum alpha**n`` over the unit-circle roots of the mask."""
    k = as_zset(k)
    ok, _ = is_b_arithmetic(k)
    if not ok:
        raise NotBArithmetic(f"{list(k.elements)} has no unit-circle root")
    if lo > hi:
        raise ValueError("empty window")
    alphas = np.array([alpha for alpha, p, on in _root_basis(k) if on and p == 0])
    n = np.arange(lo, hi + 1, dtype=float)
    vals = np.real(np.exp(np.outer(n, np.log(alphas.astype(complex)))).sum(axis=1))
    return SequenceWindow(lo, hi, tuple(float(v) for v in vals))


@dataclass(frozen=True)
class PeriodicSolution:
    """Integer solution given by one period ``pattern`` of length ``n``."""

    period: int
    pattern: tuple[int, ...]

    def __getitem__(self, g: int) -> int:
        return self.pattern[g % self.period]

    def window(self, lo: int, hi: int) -> SequenceWindow:
        return SequenceWindow(lo, hi, tuple(self[g] for g in range(lo, hi + 1)))

    def verify(self, k) -> bool:
        """Every cyclic equation sums to exactly zero."""
        k = as_zset(k)
        return all(sum(self[g + s] for s in k.elements) == 0 for g in range(self.period))

    def to_json(self) -> dict:
        return {"n": self.period, "pattern": list(self.pattern)}


def integral_periodic_solution(k) -> PeriodicSolution | None:
    """A nonzero primitive integer periodic solution, or ``None`` if none exists.

    The period is the least multiple of the smallest cyclotomic witness ``m``
    exceeding ``|K|``; the vector is the first reduced-echelon kernel vector
    of the period-``n`` system.
    """
    k = as_zset(k)
    m = is_p_arithmetic(k)
    if m is None:
        return None
    n = m * -(-(len(k) + 1) // m)
    basis = kernel_basis(circulant_from_set(k.elements, n, allow_collisions=True))
    if not basis:
        raise ArithmeticError(f"circulant of {list(k.elements)} mod {n} is unexpectedly nonsingular")
    sol = PeriodicSolution(n, tuple(clear_denominators(basis[0])))
    if not sol.verify(k):
        raise ArithmeticError("kernel vector failed verification")
    return sol


def tiling_to_solution(k, cert: tuple[int, Sequence[int]]) -> PeriodicSolution:
    """Two-level solution from a tiling certificate ``(n, C)``.

    ``x[g] = |K| - 1`` when ``-g mod n`` lies in ``C``, else ``-1``.
    """
    k = as_zset(k)
    n, offsets = cert
    if not verify_Zn_partition(k, n, offsets):
        raise BadCertificate(f"{cert} does not partition Z_{n}")
    cset = {c % n for c in offsets}
    top = len(k) - 1
    return PeriodicSolution(n, tuple(top if (-g) % n in cset else -1 for g in range(n)))

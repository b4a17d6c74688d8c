"""Level sets, Lebesgue integration, and the Sugeno integral.

The Sugeno integral of f over a with respect to a monotone measure mu is

    sup over alpha >= 0 of  min(alpha, mu(a intersect {f >= alpha})),

a max-min counterpart of the Lebesgue integral: summation becomes sup,
multiplication becomes min.  Because the inner map g(alpha) is
non-increasing while alpha increases, the supremum sits where g crosses
the identity, which is what the grid search below exploits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .fuzzy import FiniteFuzzySet, GridFunction, height_grid
from .intervals import IntervalSet
from .measures import MeasureKind, MeasureSpec, measure_of

BISECTION_TOL = 1e-10
MAX_ORACLE_UNIVERSE = 16


@dataclass(frozen=True)
class AlphaCut:
    """The superlevel set of a function at one threshold.

    ``cut`` is an IntervalSet for grid functions or a frozenset of labels
    for finite fuzzy sets; ``strict`` records whether the set is
    {f > alpha} rather than {f >= alpha}.
    """

    alpha: float
    cut: IntervalSet | frozenset
    strict: bool = False


def alpha_cut(f: GridFunction, alpha: float, strict: bool = False) -> AlphaCut:
    """Superlevel set of a grid function under its piecewise-linear reading.

    Crossing points between nodes are found by inverse interpolation on
    the straddling cell, so the cut and every integral agree about where
    the function sits relative to the threshold.  Plateaus exactly at
    alpha belong to the non-strict cut only.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0.0:
        raise ValueError(f"alpha must be finite and >= 0, got {alpha}")
    ys = f.samples
    xs = f.nodes
    sat = (ys > alpha) if strict else (ys >= alpha)
    if not sat.any():
        return AlphaCut(alpha, IntervalSet.empty(), strict)
    idx = np.flatnonzero(sat)
    # maximal runs of satisfied nodes
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([idx[0]], idx[breaks + 1]))
    ends = np.concatenate((idx[breaks], [idx[-1]]))

    def crossing(k: int) -> float:
        # x where the segment on cell [k, k+1] meets alpha
        y0, y1 = float(ys[k]), float(ys[k + 1])
        return float(xs[k]) + (alpha - y0) * (float(xs[k + 1]) - float(xs[k])) / (y1 - y0)

    pieces: list[tuple[float, float]] = []
    for s, e in zip(starts, ends):
        lo = float(xs[s]) if s == 0 else crossing(s - 1)
        hi = float(xs[e]) if e == ys.size - 1 else crossing(e)
        pieces.append((lo, hi))
    return AlphaCut(alpha, IntervalSet.from_pairs(pieces), strict)


def alpha_cut_finite(
    f: FiniteFuzzySet, alpha: float, strict: bool = False
) -> AlphaCut:
    """Superlevel subset of a finite fuzzy set."""
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0.0:
        raise ValueError(f"alpha must be finite and >= 0, got {alpha}")
    if strict:
        keep = frozenset(l for l, g in f.items() if g > alpha)
    else:
        keep = frozenset(l for l, g in f.items() if g >= alpha)
    return AlphaCut(alpha, keep, strict)


def lebesgue_integral(f: GridFunction, a: IntervalSet) -> float:
    """Integral of f over an interval set by composite trapezoid rule,
    with linear interpolation at interval endpoints that fall inside
    grid cells."""
    return f.integral_over(a)


def grid_tolerance(f: GridFunction) -> float:
    """Declared accuracy of level-set geometry on this grid.

    Equals max(1e-6, 2 h sup|f'|), the scale of how much the function can
    move across one cell; results derived from cuts of f are trusted to
    this resolution and no further.
    """
    steepest = float(np.max(np.abs(np.diff(f.samples)))) / f.spacing
    return max(1e-6, 2.0 * f.spacing * steepest)


def _sugeno_finite(f: FiniteFuzzySet, a, m: MeasureSpec) -> float:
    if m.kind is MeasureKind.POSSIBILISTIC:
        if not isinstance(m.distribution, FiniteFuzzySet):
            raise ValueError("measure domain mismatch: expected a finite measure")
        m_universe = set(m.distribution.universe)
    elif m.kind is MeasureKind.TABLE:
        m_universe = set(m.universe)
    else:
        raise ValueError(
            "finite Sugeno integration needs a finite (possibilistic or table) measure"
        )
    if set(f.universe) != m_universe:
        raise ValueError("domain mismatch: f and the measure use different universes")
    if a is None:
        labels = list(f.universe)
    else:
        subset = frozenset(str(x) for x in a)
        foreign = subset - set(f.universe)
        if foreign:
            raise ValueError(
                f"subset contains labels outside the domain: {sorted(foreign)}"
            )
        labels = [l for l in f.universe if l in subset]
    if not labels:
        return 0.0
    # classic sorted-value evaluation: walk values downward, growing the
    # top-set, and keep the best min(value, mu(top-set))
    order = sorted(labels, key=f.grade_of, reverse=True)
    best = 0.0
    top: list[str] = []
    for label in order:
        top.append(label)
        best = max(best, min(f.grade_of(label), measure_of(m, top)))
    return best


def _sugeno_grid(f: GridFunction, a: IntervalSet, m: MeasureSpec) -> float:
    if m.kind is MeasureKind.TABLE or isinstance(m.distribution, FiniteFuzzySet):
        raise ValueError("measure domain mismatch: expected a grid measure")
    f._check_intervals(a)

    def g(alpha: float) -> float:
        cut = alpha_cut(f, alpha).cut
        return measure_of(m, cut.intersection(a))

    top = height_grid(f)
    if top <= 0.0 or a.is_empty:
        return 0.0

    # g is non-increasing, so h(alpha) = min(alpha, g(alpha)) rises like
    # alpha until g crosses the identity and falls with g afterwards.
    # Among the sampled levels only the two bracketing the crossing can
    # attain the max, so locate them by bisection on the sorted levels
    # instead of scanning all of them; then refine between those levels.
    levels = np.unique(f.samples)
    levels = levels[levels > 0.0]
    best = 0.0
    top_level = float(levels[-1])
    if g(top_level) >= top_level:
        return min(top_level, g(top_level))
    lo_idx, hi_idx = -1, levels.size - 1  # virtual level 0 below index 0
    while hi_idx - lo_idx > 1:
        mid = (lo_idx + hi_idx) // 2
        v = float(levels[mid])
        if g(v) >= v:
            lo_idx = mid
        else:
            hi_idx = mid
    lo = 0.0 if lo_idx < 0 else float(levels[lo_idx])
    hi = float(levels[hi_idx])
    best = max(best, lo, min(hi, g(hi)))
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        if g(mid) >= mid:
            lo = mid
        else:
            hi = mid
    return max(best, lo, min(hi, g(hi)))


def sugeno_integral(f, a, m: MeasureSpec) -> float:
    """Sugeno integral of f over a with respect to a monotone measure.

    Finite fuzzy sets use the exact sorted-value evaluation; ``a`` is an
    iterable of labels or None for the whole universe.  Grid functions
    take ``a`` as an IntervalSet and search the crossing of
    g(alpha) = mu(a intersect {f >= alpha}) with the identity, refining
    by bisection to 1e-10 between the two sampled levels that bracket it.
    """
    if isinstance(f, FiniteFuzzySet):
        return _sugeno_finite(f, a, m)
    if isinstance(f, GridFunction):
        if not isinstance(a, IntervalSet):
            raise ValueError("grid Sugeno integration takes an IntervalSet event")
        return _sugeno_grid(f, a, m)
    raise ValueError("f must be a FiniteFuzzySet or GridFunction")


def sugeno_bruteforce_oracle(
    f: FiniteFuzzySet, a, m: MeasureSpec, grid: int = 100001
) -> float:
    """Direct evaluation of sup min(alpha, mu(a intersect {f >= alpha}))
    on a dense uniform alpha grid over [0, max f].

    Deliberately naive: no sorting, no crossing argument.  Off by at most
    one grid spacing from the true supremum, it exists to cross-check
    ``sugeno_integral`` on small universes (at most 16 elements).
    """
    if len(f.universe) > MAX_ORACLE_UNIVERSE:
        raise ValueError(
            f"oracle supports at most {MAX_ORACLE_UNIVERSE} elements"
        )
    if grid < 2:
        raise ValueError("grid must have at least 2 levels")
    if a is None:
        a_mask = np.ones(len(f.universe), dtype=bool)
    else:
        subset = frozenset(str(x) for x in a)
        foreign = subset - set(f.universe)
        if foreign:
            raise ValueError(
                f"subset contains labels outside the domain: {sorted(foreign)}"
            )
        a_mask = np.array([l in subset for l in f.universe])
    alphas = np.linspace(0.0, float(f.grades.max()), int(grid))
    ids = np.zeros(alphas.size, dtype=np.int64)
    for k in range(len(f.universe)):
        if a_mask[k]:
            ids |= (f.grades[k] >= alphas).astype(np.int64) << k
    uniq, inverse = np.unique(ids, return_inverse=True)
    mu_uniq = np.array(
        [
            measure_of(
                m,
                [f.universe[k] for k in range(len(f.universe)) if uid & (1 << k)],
            )
            for uid in uniq
        ]
    )
    mu = mu_uniq[inverse]
    return float(np.max(np.minimum(alphas, mu)))

"""Monotone measures: additive (probability-style), possibilistic, and tabular.

A measure here is any set function with mu(empty) = 0 that is monotone
under inclusion.  Additive measures integrate a sampled density;
possibilistic measures take the supremum of a distribution whose global
sup is 1; table measures enumerate every subset of a small finite
universe explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import numpy as np

from .fuzzy import FiniteFuzzySet, GridFunction, height, height_grid
from .intervals import IntervalSet, union_all

MAX_TABLE_UNIVERSE = 12


class MeasureKind(Enum):
    ADDITIVE_DENSITY = "additive_density"
    POSSIBILISTIC = "possibilistic"
    TABLE = "table"


@dataclass(frozen=True, eq=False)
class MeasureSpec:
    """One monotone measure, built through the three factory methods.

    ``additive`` wraps a sampled density; the density's integral over its
    grid is recorded in ``norm`` and ``is_normalized`` reports whether it
    is 1 within 1e-6.  Unnormalized densities are accepted and flagged,
    never silently rescaled.

    ``possibilistic`` wraps a possibility distribution (grid or finite)
    whose supremum must be 1 within 1e-9; events are measured by sup.

    ``from_table`` takes an explicit, total map from subsets of a small
    finite universe to values, validated exhaustively for the axioms
    mu(empty) = 0, mu(universe) = 1, and monotonicity under inclusion.
    """

    kind: MeasureKind
    density: GridFunction | None = None
    distribution: GridFunction | FiniteFuzzySet | None = None
    table: Mapping[frozenset, float] | None = None
    universe: tuple[str, ...] | None = None
    norm: float | None = None

    @property
    def is_normalized(self) -> bool:
        if self.kind is not MeasureKind.ADDITIVE_DENSITY:
            return True
        return abs(self.norm - 1.0) <= 1e-6

    @classmethod
    def additive(cls, density: GridFunction) -> "MeasureSpec":
        norm = density.integral_over(density.full_span())
        return cls(MeasureKind.ADDITIVE_DENSITY, density=density, norm=norm)

    @classmethod
    def possibilistic(
        cls, distribution: GridFunction | FiniteFuzzySet
    ) -> "MeasureSpec":
        if isinstance(distribution, GridFunction):
            sup = height_grid(distribution)
        elif isinstance(distribution, FiniteFuzzySet):
            sup = height(distribution)
        else:
            raise ValueError(
                "distribution must be a GridFunction or FiniteFuzzySet"
            )
        if abs(sup - 1.0) > 1e-9:
            raise ValueError(
                f"possibility distribution must have supremum 1, got {sup}"
            )
        return cls(MeasureKind.POSSIBILISTIC, distribution=distribution)

    @classmethod
    def from_table(
        cls, universe: Iterable[str], table: Mapping[Iterable[str], float]
    ) -> "MeasureSpec":
        labels = tuple(str(x) for x in universe)
        if not labels:
            raise ValueError("table universe must be non-empty")
        if len(set(labels)) != len(labels):
            raise ValueError("table universe labels must be unique")
        if len(labels) > MAX_TABLE_UNIVERSE:
            raise ValueError(
                f"table measures support at most {MAX_TABLE_UNIVERSE} elements, "
                f"got {len(labels)}"
            )
        label_set = frozenset(labels)
        canon: dict[frozenset, float] = {}
        for key, value in table.items():
            subset = frozenset(str(x) for x in key)
            if not subset <= label_set:
                extra = sorted(subset - label_set)
                raise ValueError(f"table subset contains foreign labels {extra}")
            if subset in canon:
                raise ValueError(f"duplicate table entry for {sorted(subset)}")
            v = float(value)
            if math.isnan(v) or v < 0.0:
                raise ValueError(f"table value for {sorted(subset)} must be >= 0")
            canon[subset] = v
        if len(canon) != 2 ** len(labels):
            raise ValueError(
                f"table must be total: expected {2 ** len(labels)} subsets, "
                f"got {len(canon)}"
            )
        if abs(canon[frozenset()]) > 1e-12:
            raise ValueError("table must assign 0 to the empty subset")
        if abs(canon[label_set] - 1.0) > 1e-12:
            raise ValueError("table must assign 1 to the whole universe")
        # removing one element can never increase the value; by chaining,
        # this check covers every nested pair
        for subset, value in canon.items():
            for e in subset:
                smaller = canon[subset - {e}]
                if smaller > value + 1e-12:
                    raise ValueError(
                        f"table is not monotone: mu({sorted(subset - {e})}) = "
                        f"{smaller} exceeds mu({sorted(subset)}) = {value}"
                    )
        return cls(MeasureKind.TABLE, table=canon, universe=labels)


def _as_label_subset(m: MeasureSpec, a: Iterable[str], universe) -> frozenset:
    subset = frozenset(str(x) for x in a)
    foreign = subset - frozenset(universe)
    if foreign:
        raise ValueError(f"subset contains labels outside the domain: {sorted(foreign)}")
    return subset


def measure_of(m: MeasureSpec, a) -> float:
    """Measure of an event: an IntervalSet (grid measures) or an iterable
    of labels (finite measures)."""
    if m.kind is MeasureKind.ADDITIVE_DENSITY:
        if not isinstance(a, IntervalSet):
            raise ValueError("additive measures act on interval sets")
        return m.density.integral_over(a)
    if m.kind is MeasureKind.POSSIBILISTIC:
        if isinstance(m.distribution, GridFunction):
            if not isinstance(a, IntervalSet):
                raise ValueError(
                    "this possibilistic measure acts on interval sets"
                )
            return m.distribution.max_over(a)
        if isinstance(a, IntervalSet):
            raise ValueError("this possibilistic measure acts on label subsets")
        subset = _as_label_subset(m, a, m.distribution.universe)
        if not subset:
            return 0.0
        return max(m.distribution.grade_of(label) for label in subset)
    # table
    if isinstance(a, IntervalSet):
        raise ValueError("table measures act on label subsets")
    subset = _as_label_subset(m, a, m.universe)
    try:
        return m.table[subset]
    except KeyError:
        raise ValueError(
            f"table has no entry for {sorted(subset)}; tables must be total"
        ) from None


def check_possibility_union_axiom(
    m: MeasureSpec, parts: Iterable[IntervalSet], tol: float = 1e-12
) -> bool:
    """Does mu(union of parts) equal the max of the part measures?

    Only meaningful for possibilistic measures; the union of no parts is
    empty and both sides are 0.
    """
    if m.kind is not MeasureKind.POSSIBILISTIC:
        raise ValueError("union axiom check applies to possibilistic measures")
    parts = list(parts)
    whole = measure_of(m, union_all(parts))
    each = max((measure_of(m, p) for p in parts), default=0.0)
    return abs(whole - each) <= tol


def check_additivity(
    m: MeasureSpec, parts: Iterable[IntervalSet], tol: float = 1e-9
) -> bool:
    """Does mu(union of parts) equal the sum over pairwise-disjoint parts?"""
    if m.kind is not MeasureKind.ADDITIVE_DENSITY:
        raise ValueError("additivity check applies to additive measures")
    parts = list(parts)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i].overlaps(parts[j]):
                raise ValueError(f"parts {i} and {j} overlap; they must be disjoint")
    whole = measure_of(m, union_all(parts))
    total = math.fsum(measure_of(m, p) for p in parts)
    return abs(whole - total) <= tol


def normalize_to_possibility(f: GridFunction) -> GridFunction:
    """Rescale a non-negative grid function so its supremum is exactly 1."""
    return f.scaled_by_max()


# --- table text format -----------------------------------------------------

def write_table_measure(m: MeasureSpec, path) -> None:
    """Write ``e1|e2|...,value`` lines, one subset per line; {} is empty."""
    if m.kind is not MeasureKind.TABLE:
        raise ValueError("only table measures have a table text form")
    order = {label: i for i, label in enumerate(m.universe)}
    with open(path, "w", encoding="utf-8") as fh:
        for subset in sorted(
            m.table, key=lambda s: (len(s), sorted(order[x] for x in s))
        ):
            key = "{}" if not subset else "|".join(
                sorted(subset, key=order.__getitem__)
            )
            fh.write(f"{key},{m.table[subset]!r}\n")


def read_table_measure(path) -> MeasureSpec:
    """Read ``e1|e2|...,value`` lines; the universe is the union of all
    labels mentioned (so the full-universe line must be present)."""
    entries: list[tuple[frozenset, float]] = []
    labels: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            key, sep, value = text.rpartition(",")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected 'subset,value'")
            key = key.strip()
            subset = (
                frozenset()
                if key == "{}"
                else frozenset(part.strip() for part in key.split("|"))
            )
            if subset and any(not x for x in subset):
                raise ValueError(f"{path}:{lineno}: empty label in subset")
            entries.append((subset, float(value)))
            labels |= subset
    table = dict(entries)
    if len(table) != len(entries):
        raise ValueError(f"{path}: duplicate subset lines")
    return MeasureSpec.from_table(tuple(sorted(labels)), table)

# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Bounded compositions: u1 + ... + uh = t with 0 <= ui < ai

Constraint C(i) is ui < ai. Violating all constraints in U means
ui >= ai for i in U, so N(U) depends only on val(U) = sum of the ai in U.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from iex.config import OracleBudget
from iex.engine import ie_counter, upgrade_a_weighted
from iex.exclusion import GeneratorSet, n_algorithm
from iex.errors import BudgetExceeded
from iex.facecount import ParityWeightTable, union_parity_weight
from iex.rows import Face, RowUnion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompSpec:
    """bounds: strict upper bounds a1..ah; target: t"""

    bounds: Tuple[int, ...]
    target: int

    def __post_init__(self):
        bounds = tuple(self.bounds)
        if not bounds:
            raise ValueError("At least one variable is required")
        for a in bounds:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"Invalid bound {a!r}. Must be a positive integer")
        if not isinstance(self.target, int) or self.target < 0:
            raise ValueError(f"Invalid target {self.target!r}. Must be >= 0")
        object.__setattr__(self, "bounds", bounds)

    @property
    def h(self) -> int:
        return len(self.bounds)


def comp_generators(spec: CompSpec) -> GeneratorSet:
    """All minimal index sets whose bounds sum past the target

    Indices are tried in descending bound order; a branch stops once the
    running sum passes t (the set is then minimal) or once the remaining
    bounds cannot get it there.
    """
    order = sorted(range(1, spec.h + 1), key=lambda i: (-spec.bounds[i - 1], i))
    a = [spec.bounds[i - 1] for i in order]
    tail = [0] * (len(a) + 1)
    for j in range(len(a) - 1, -1, -1):
        tail[j] = tail[j + 1] + a[j]
    t = spec.target
    found = []

    def dfs(start, chosen, total):
        for j in range(start, len(a)):
            if total + tail[j] <= t:
                return
            if total + a[j] > t:
                found.append(frozenset(chosen + [order[j]]))
            else:
                dfs(j + 1, chosen + [order[j]], total + a[j])

    dfs(0, [], 0)
    found.sort(key=lambda s: (len(s), sorted(s)))
    logger.debug("%d minimal oversums for t=%d", len(found), t)
    return GeneratorSet(spec.h, tuple(found))


def g_of_v(v, spec: CompSpec) -> int:
    """Compositions with ui >= ai on a set of bound sum v: C(t - v + h - 1, h - 1)"""
    if v > spec.target:
        return 0
    return comb(spec.target - v + spec.h - 1, spec.h - 1)


class bounded_comp(ie_counter):
    """Number of compositions of t bounded above by the ai"""

    def __init__(self, spec: CompSpec):
        self.spec = spec
        self._generators = None

    @property
    def generators(self) -> GeneratorSet:
        """generators: Minimal oversum index sets"""
        if self._generators is None:
            self._generators = comp_generators(self.spec)
        return self._generators

    @property
    def parity_weights(self) -> ParityWeightTable:
        """parity_weights: Even/odd face counts by bound sum"""
        return union_parity_weight(self.rows, self.spec.bounds)

    def _relevant_rows(self) -> RowUnion:
        return n_algorithm(self.generators)

    def _face_count(self, u: Face) -> int:
        return g_of_v(sum(self.spec.bounds[i - 1] for i in u), self.spec)

    def count(self) -> int:
        return upgrade_a_weighted(self.parity_weights, lambda v: g_of_v(v, self.spec))


def count_bounded_compositions(spec: CompSpec) -> int:
    return bounded_comp(spec).count()


def _check_target(spec: CompSpec, budget: Optional[OracleBudget]):
    cap = (budget if budget is not None else OracleBudget()).max_comp_target
    if spec.target > cap:
        raise BudgetExceeded("t", spec.target, cap)


def dp_table(
    spec: CompSpec, budget: Optional[OracleBudget] = None
) -> List[List[int]]:
    """Suffix table: row j-1 holds N(j..h; k) for k = 0..t"""
    _check_target(spec, budget)
    t = spec.target
    rows = [[1 if k < spec.bounds[-1] else 0 for k in range(t + 1)]]
    for a in reversed(spec.bounds[:-1]):
        below = rows[0]
        prefix = [0]
        for value in below:
            prefix.append(prefix[-1] + value)
        # sum of below[k - u] for u = 0..min(a - 1, k)
        rows.insert(
            0, [prefix[k + 1] - prefix[max(k - a + 1, 0)] for k in range(t + 1)]
        )
    return rows


def dp_oracle(spec: CompSpec, budget: Optional[OracleBudget] = None) -> int:
    return dp_table(spec, budget)[0][spec.target]


def genfun_oracle(spec: CompSpec, budget: Optional[OracleBudget] = None) -> int:
    """Coefficient of x^t in the product of the 1 + x + ... + x^(ai - 1)"""
    _check_target(spec, budget)
    t = spec.target
    poly = [1] + [0] * t
    for a in spec.bounds:
        out = [0] * (t + 1)
        for i, c in enumerate(poly):
            if c:
                for j in range(min(a, t + 1 - i)):
                    out[i + j] += c
        poly = out
    return poly[t]

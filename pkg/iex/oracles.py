# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Brute-force reference counts

Every oracle scans its whole search space straight from the constraint
definitions and refuses to start beyond its OracleBudget cap.
"""

import logging
from itertools import permutations, product
from math import factorial, perm
from typing import List, Optional, Union

import numpy as np

from iex.config import OracleBudget
from iex.errors import BudgetExceeded
from iex.perm import BlockSpec, MapMode, MapSpec
from iex.rows import Face

logger = logging.getLogger(__name__)

_CHUNK = 1 << 20


def _budget(budget):
    return budget if budget is not None else OracleBudget()


def brute_set_ideal(g, budget: Optional[OracleBudget] = None) -> List[Face]:
    """All U in P[h] containing no generator, in bitmask order"""
    cap = _budget(budget).max_ground_size
    if g.h > cap:
        raise BudgetExceeded("h", g.h, cap)
    masks = np.arange(1 << g.h, dtype=np.int64)
    keep = np.ones(masks.shape, dtype=bool)
    for gen in g.generators:
        bits = sum(1 << (i - 1) for i in gen)
        keep &= (masks & bits) != bits
    return [
        Face((i + 1 for i in range(g.h) if (m >> i) & 1), g.h)
        for m in masks[keep].tolist()
    ]


def all_permutations(n) -> np.ndarray:
    """Every permutation of 1..n as the rows of an int8 array"""
    table = np.zeros((1, 0), dtype=np.int8)
    for k in range(1, n + 1):
        table = np.concatenate(
            [np.insert(table, p, k, axis=1) for p in range(k)], axis=0
        )
    return table


def _brute_blocks(spec: BlockSpec, budget: OracleBudget) -> int:
    if spec.n > budget.max_factorial_base:
        raise BudgetExceeded("n", spec.n, budget.max_factorial_base)
    table = all_permutations(spec.n)
    # where[:, s - 1] is the position of symbol s
    where = np.argsort(table, axis=1)
    ok = np.ones(table.shape[0], dtype=bool)
    for block in spec.blocks:
        contiguous = np.ones(table.shape[0], dtype=bool)
        for x, y in zip(block, block[1:]):
            contiguous &= where[:, y - 1] == where[:, x - 1] + 1
        ok &= ~contiguous
    return int(ok.sum())


def _violated(table, constraint):
    hit = np.ones(table.shape[0], dtype=bool)
    for p, v in constraint.pairs:
        hit &= table[:, p - 1] == v
    return hit


def _brute_injective(spec: MapSpec, budget: OracleBudget) -> int:
    cap = budget.max_factorial_base
    if spec.n > cap or perm(spec.m, spec.n) > factorial(cap):
        raise BudgetExceeded("n", spec.n, cap)
    if spec.m == spec.n:
        table = all_permutations(spec.n)
    else:
        table = np.array(
            list(permutations(range(1, spec.m + 1), spec.n)), dtype=np.int16
        ).reshape(-1, spec.n)
    ok = np.ones(table.shape[0], dtype=bool)
    for c in spec.constraints:
        ok &= ~_violated(table, c)
    return int(ok.sum())


def _brute_arbitrary(spec: MapSpec, budget: OracleBudget) -> int:
    if spec.n > budget.max_factorial_base:
        raise BudgetExceeded("n", spec.n, budget.max_factorial_base)
    mentioned = {}
    for c in spec.constraints:
        for p, v in c.pairs:
            mentioned.setdefault(p, set()).add(v)
    positions = sorted(mentioned)
    # one candidate per mentioned value, plus 0 standing for every other value
    choices = [sorted(mentioned[p]) + [0] for p in positions]
    others = [spec.m - len(mentioned[p]) for p in positions]
    total = 0
    for picks in product(*choices):
        value = dict(zip(positions, picks))
        if any(all(value[p] == v for p, v in c.pairs) for c in spec.constraints):
            continue
        weight = 1
        for pick, other in zip(picks, others):
            if not pick:
                weight *= other
        total += weight
    return total * spec.m ** (spec.n - len(positions))


def brute_permutations(
    spec: Union[BlockSpec, MapSpec], budget: Optional[OracleBudget] = None
) -> int:
    """Count permutations (or maps) satisfying every constraint directly"""
    budget = _budget(budget)
    if isinstance(spec, BlockSpec):
        result = _brute_blocks(spec, budget)
    elif spec.mode is MapMode.INJECTIVE:
        result = _brute_injective(spec, budget)
    else:
        result = _brute_arbitrary(spec, budget)
    logger.debug("brute_permutations: %d", result)
    return result


def _popcount(x):
    return np.unpackbits(x.view(np.uint8)).reshape(-1, 64).sum(axis=1)


def _scan_assignments(n, k, budget, accept):
    cap = _budget(budget).max_dnf_variables
    if n > cap:
        raise BudgetExceeded("n", n, cap)
    if k is not None and not 0 <= k <= n:
        return 0
    total = 0
    for start in range(0, 1 << n, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.uint64)
        ok = accept(x)
        if k is not None:
            ok &= _popcount(x) == k
        total += int(ok.sum())
    return total


def _masks(row):
    ones = zeros = 0
    for i, c in enumerate(row.cells):
        if c == 1:
            ones |= 1 << i
        elif c == 0:
            zeros |= 1 << i
    return np.uint64(ones), np.uint64(zeros)


def brute_dnf(spec, k=None, budget: Optional[OracleBudget] = None) -> int:
    """Models of a DNF (with k true variables when k is given) over all 2^n
    assignments
    """
    terms = [_masks(t) for t in spec.terms]

    def accept(x):
        ok = np.zeros(x.shape, dtype=bool)
        for ones, zeros in terms:
            ok |= ((x & ones) == ones) & ((x & zeros) == 0)
        return ok

    return _scan_assignments(spec.n, k, budget, accept)


def brute_cnf(spec, k=None, budget: Optional[OracleBudget] = None) -> int:
    """Models of a CNF over all 2^n assignments"""
    clauses = [_masks(c) for c in spec.clauses]

    def accept(x):
        ok = np.ones(x.shape, dtype=bool)
        for ones, zeros in clauses:
            ok &= ((x & ones) != 0) | ((~x & zeros) != 0)
        return ok

    return _scan_assignments(spec.n, k, budget, accept)

# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

import logging
from abc import ABCMeta, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional, Sequence

from iex.facecount import FaceVector, ParityWeightTable, union_face_numbers
from iex.rows import Face, RowUnion

logger = logging.getLogger(__name__)

CountFn = Callable[[Face], int]


class SignConvention(Enum):
    """PRIMAL: sum over all faces of (-1)^|U| N(U)
    DUAL: sum over nonempty faces of (-1)^(|U|+1) N(U)
    """

    PRIMAL = "primal"
    DUAL = "dual"


def _row_sum(row, n, s):
    total = 0
    for u in row.enumerate():
        k = len(u)
        if s is SignConvention.DUAL:
            if not k:
                continue
            k += 1
        value = n(u)
        total += -value if k % 2 else value
    return total


def upgrade_b_scan(
    u: RowUnion,
    n: CountFn,
    s: SignConvention = SignConvention.PRIMAL,
    threads=1,
    memoize=False,
) -> int:
    """Signed sum of N(U) over every face U of a disjoint row union

    Faces are streamed row by row; rows are summed concurrently when
    threads > 1. n must be pure.
    """
    if threads < 1:
        raise ValueError(f"Invalid threads: {threads}. Must be >= 1")
    if memoize:
        n = lru_cache(maxsize=None)(n)
    if threads == 1 or len(u) < 2:
        partial = [_row_sum(r, n, s) for r in u]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partial = list(pool.map(lambda r: _row_sum(r, n, s), u))
    total = sum(partial)
    logger.debug("upgrade B over %d rows (%s): %d", len(u), s.value, total)
    return total


def upgrade_a(f: Sequence[int], g: Callable[[int], int]) -> int:
    """sum_k (-1)^k f(k) g(k); g is only evaluated where f(k) != 0"""
    total = 0
    for k, fk in enumerate(f):
        if fk:
            term = fk * g(k)
            total += -term if k % 2 else term
    return total


def upgrade_a_weighted(t: ParityWeightTable, g: Callable[[int], int]) -> int:
    """sum_v c_v g(v) - sum_v d_v g(v)"""
    even = sum(n * g(v) for v, n in t.c.items())
    odd = sum(n * g(v) for v, n in t.d.items())
    logger.debug("weighted upgrade A: %d - %d", even, odd)
    return even - odd


def face_count_fn(g: Callable[[int], int]) -> CountFn:
    """CountFn for N(U) = g(|U|)"""

    def count(u):
        return g(len(u))

    return count


def weight_count_fn(g: Callable[[int], int], w: Sequence[int]) -> CountFn:
    """CountFn for N(U) = g(a_i1 + ... + a_ik)"""
    w = tuple(w)

    def count(u):
        return g(sum(w[i - 1] for i in u))

    return count


class ie_counter(metaclass=ABCMeta):
    """Inclusion-exclusion counter over a relevant set ideal

    Subclasses provide the relevant rows and N(U); count() runs the upgrade B
    scan unless a subclass has a closed form to offer.
    """

    _sign = SignConvention.PRIMAL
    _threads = 1
    _memoize = False
    _rows: Optional[RowUnion] = None

    @abstractmethod
    def _relevant_rows(self) -> RowUnion:
        """Build the disjoint row union of the relevant faces"""
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def _face_count(self, u: Face) -> int:
        """N(U) for a relevant face U"""
        raise NotImplementedError  # pragma: no cover

    @property
    def rows(self) -> RowUnion:
        """rows: Relevant faces as a disjoint row union (built once)"""
        if self._rows is None:
            self._rows = self._relevant_rows()
        return self._rows

    @property
    def sign(self) -> SignConvention:
        """sign: Sign convention of the scan"""
        return self._sign

    @property
    def threads(self) -> int:
        """threads: Worker count for row scans"""
        return self._threads

    @threads.setter
    def threads(self, value):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"Invalid threads: {value}. Must be >= 1")
        self._threads = value

    @property
    def memoize(self) -> bool:
        """memoize: Cache N(U) by face content during scans"""
        return self._memoize

    @memoize.setter
    def memoize(self, value):
        self._memoize = bool(value)

    @property
    def face_numbers(self) -> FaceVector:
        """face_numbers: f(k) of the relevant faces"""
        return union_face_numbers(self.rows)

    def scan(self) -> int:
        """Face by face evaluation"""
        return upgrade_b_scan(
            self.rows, self._face_count, self._sign, self._threads, self._memoize
        )

    def count(self) -> int:
        return self.scan()

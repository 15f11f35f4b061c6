# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Model counting for Boolean functions in DNF and CNF

A DNF is a list of terms, each a TernaryRow over the n variables (1 positive
literal, 0 negated literal, 2 absent). The relevant faces are the anticliques
of the term clash graph; the count is a DUAL scan with
N(U) = |intersection of the term rows in U|.
"""

import logging
import time
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple, Union

import numpy as np

from iex.engine import SignConvention, ie_counter
from iex.errors import ParseError
from iex.exclusion import ClashGraph, ab_algorithm
from iex.facecount import union_face_numbers
from iex.rows import ABRow, Face, RowUnion, TernaryRow

logger = logging.getLogger(__name__)


def _as_rows(rows, n):
    rows = tuple(r if isinstance(r, TernaryRow) else TernaryRow(tuple(r)) for r in rows)
    for r in rows:
        if r.h != n:
            raise ValueError(f"Row {r} has length {r.h}, expected n={n}")
    return rows


@dataclass(frozen=True)
class DnfSpec:
    """Disjunction of the conjunctions encoded by terms"""

    n: int
    terms: Tuple[TernaryRow, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Invalid variable count: {self.n}")
        object.__setattr__(self, "terms", _as_rows(self.terms, self.n))

    @property
    def h(self) -> int:
        return len(self.terms)

    def evaluate(self, x) -> bool:
        """Value of the function on the assignment x (set of true variables)"""
        return any(t.contains(x) for t in self.terms)


@dataclass(frozen=True)
class CnfSpec:
    """Conjunction of clauses; a clause row lists its literals like a term"""

    n: int
    clauses: Tuple[TernaryRow, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Invalid variable count: {self.n}")
        object.__setattr__(self, "clauses", _as_rows(self.clauses, self.n))

    @property
    def h(self) -> int:
        return len(self.clauses)

    def dual(self) -> DnfSpec:
        """DNF of the negated function: literal signs switched clause-wise"""
        swap = {0: 1, 1: 0, 2: 2}
        return DnfSpec(
            self.n,
            tuple(TernaryRow(tuple(swap[c] for c in cl.cells)) for cl in self.clauses),
        )

    def evaluate(self, x) -> bool:
        return not self.dual().evaluate(x)


def term_clash_graph(spec: DnfSpec) -> ClashGraph:
    """Terms adjacent when they share no model"""
    edges = []
    for i, p in enumerate(spec.terms, 1):
        for j in range(i + 1, spec.h + 1):
            q = spec.terms[j - 1]
            if p.ones_mask & q.zeros_mask or p.zeros_mask & q.ones_mask:
                edges.append((i, j))
    return ClashGraph(spec.h, edges)


def fixed_k_card(beta, gamma, k) -> int:
    """k-element models of a row with beta ones and gamma twos"""
    if beta <= k <= beta + gamma:
        return comb(gamma, k - beta)
    return 0


class dnf(ie_counter):
    """Number of models of a DNF, optionally only those with k true variables"""

    _sign = SignConvention.DUAL

    def __init__(self, spec: DnfSpec, k: Optional[int] = None):
        self.n = spec.n
        self.k = k
        unique = []
        for t in spec.terms:
            if t not in unique:
                unique.append(t)
        if len(unique) < spec.h:
            logger.info("Dropped %d duplicate terms", spec.h - len(unique))
        self.spec = DnfSpec(spec.n, tuple(unique))
        self._ones = [t.ones_mask for t in unique]
        self._zeros = [t.zeros_mask for t in unique]

    @property
    def graph(self) -> ClashGraph:
        """graph: Term clash graph"""
        return term_clash_graph(self.spec)

    def _masks(self, u):
        ones = zeros = 0
        for i in u:
            ones |= self._ones[i - 1]
            zeros |= self._zeros[i - 1]
        return ones, zeros

    def _feasible(self, row: ABRow) -> bool:
        # every face of the row contains row.ones, so its intersection row has
        # at least these ones and zeros
        ones, zeros = self._masks(row.ones)
        return ones.bit_count() <= self.k and self.n - zeros.bit_count() >= self.k

    def _relevant_rows(self) -> RowUnion:
        prune = self._feasible if self.k is not None else None
        return ab_algorithm(self.graph, prune=prune)

    def _face_count(self, u: Face) -> int:
        ones, zeros = self._masks(u)
        gamma = self.n - (ones | zeros).bit_count()
        if self.k is None:
            return 2**gamma
        return fixed_k_card(ones.bit_count(), gamma, self.k)

    def count(self) -> int:
        if self.k is not None and not 0 <= self.k <= self.n:
            return 0
        if not self.spec.terms:
            return 0
        if any(not t.ones and not t.zeros for t in self.spec.terms):
            logger.info("Tautological term: every assignment is a model")
            return 2**self.n if self.k is None else comb(self.n, self.k)
        return self.scan()


class cnf:
    """Number of models of a CNF through the negated DNF"""

    def __init__(self, spec: CnfSpec, k: Optional[int] = None):
        self.spec = spec
        self.k = k
        self._dual = dnf(spec.dual(), k)

    @property
    def rows(self):
        """rows: Relevant rows of the negated DNF"""
        return self._dual.rows

    @property
    def threads(self) -> int:
        """threads: Worker count for row scans"""
        return self._dual.threads

    @threads.setter
    def threads(self, value):
        self._dual.threads = value

    def count(self) -> int:
        n = self.spec.n
        if self.k is None:
            return 2**n - self._dual.count()
        if not 0 <= self.k <= n:
            return 0
        return comb(n, self.k) - self._dual.count()


def model_count(spec: DnfSpec, threads=1) -> int:
    counter = dnf(spec)
    counter.threads = threads
    return counter.count()


def model_count_fixed_k(spec: DnfSpec, k, threads=1) -> int:
    counter = dnf(spec, k)
    counter.threads = threads
    return counter.count()


def cnf_model_count(spec: CnfSpec, k=None, threads=1) -> int:
    counter = cnf(spec, k)
    counter.threads = threads
    return counter.count()


def random_dnf(n, n1, n0, h, seed=None) -> DnfSpec:
    """h random terms, each with n1 positive and n0 negative literals on
    distinct variables
    """
    for name, value in (("n", n), ("n1", n1), ("n0", n0), ("h", h)):
        if value < 0:
            raise ValueError(f"Invalid {name}: {value}. Must be >= 0")
    if n1 + n0 > n:
        raise ValueError(f"n1 + n0 = {n1 + n0} exceeds n = {n}")
    rng = np.random.default_rng(seed)
    terms = []
    for _ in range(h):
        cells = np.full(n, 2, dtype=np.int8)
        picks = rng.choice(n, size=n1 + n0, replace=False)
        cells[picks[:n1]] = 1
        cells[picks[n1:]] = 0
        terms.append(TernaryRow(tuple(int(c) for c in cells)))
    return DnfSpec(n, tuple(terms))


def read_dimacs(text, path=None) -> Union[DnfSpec, CnfSpec]:
    """Parse ``p dnf n h`` / ``p cnf n h`` files

    One term or clause per line as signed 1-based variable indices closed by
    0; lines starting with c are comments. Contradictory terms and
    tautological clauses are dropped.
    """
    kind = None
    n = declared = 0
    rows: List[TernaryRow] = []
    seen = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if kind is None:
            fields = stripped.split()
            if (
                len(fields) != 4
                or fields[0] != "p"
                or fields[1] not in ("dnf", "cnf")
                or not all(f.isdigit() for f in fields[2:])
            ):
                raise ParseError(
                    "Expected header 'p dnf n h' or 'p cnf n h'", lineno, 1, path
                )
            kind, n, declared = fields[1], int(fields[2]), int(fields[3])
            continue
        literals = []
        for token in stripped.split():
            try:
                literals.append(int(token))
            except ValueError:
                raise ParseError(
                    f"Expected a literal, got {token!r}",
                    lineno,
                    line.find(token) + 1,
                    path,
                ) from None
        if not literals or literals[-1] != 0 or 0 in literals[:-1]:
            raise ParseError(
                "Each line must end with a single 0", lineno, len(line), path
            )
        seen += 1
        cells = [2] * n
        clash = False
        for lit in literals[:-1]:
            var = abs(lit)
            if var > n:
                raise ParseError(
                    f"Variable {var} outside [1, {n}]",
                    lineno,
                    line.find(str(lit)) + 1,
                    path,
                )
            value = 1 if lit > 0 else 0
            if cells[var - 1] not in (2, value):
                clash = True
            cells[var - 1] = value
        if clash:
            logger.info("Line %d: dropped %s containing x and not x", lineno, kind)
            continue
        rows.append(TernaryRow(tuple(cells)))
    if kind is None:
        raise ParseError("Missing header line", 1, 0, path)
    if seen != declared:
        raise ParseError(f"Header announces {declared} lines, found {seen}", 1, 0, path)
    if kind == "dnf":
        return DnfSpec(n, tuple(rows))
    return CnfSpec(n, tuple(rows))


BENCH_COLUMNS = ("h", "n", "n1", "n0", "anticliqueCount", "maxAnticlique", "millis")


@dataclass(frozen=True)
class BenchRecord:
    h: int
    n: int
    n1: int
    n0: int
    anticlique_count: int
    max_anticlique: int
    millis: float
    models: int

    def as_row(self):
        return (
            self.h,
            self.n,
            self.n1,
            self.n0,
            self.anticlique_count,
            self.max_anticlique,
            f"{self.millis:.1f}",
        )


def bench_dnf(n, n1, n0, h, seed=0, trials=1, threads=1) -> List[BenchRecord]:
    """Count random DNFs, one record per sampled DNF (seeds seed, seed + 1, ...)"""
    records = []
    for trial in range(trials):
        spec = random_dnf(n, n1, n0, h, seed + trial)
        start = time.perf_counter()
        counter = dnf(spec)
        counter.threads = threads
        models = counter.count()
        millis = (time.perf_counter() - start) * 1000
        f = union_face_numbers(counter.rows)
        largest = max((k for k, c in enumerate(f) if c), default=0)
        records.append(
            BenchRecord(h, n, n1, n0, f.total(), largest, millis, models)
        )
        logger.info(
            "bench seed=%d: %d anticliques, largest %d, %.1f ms",
            seed + trial,
            f.total(),
            largest,
            millis,
        )
    return records

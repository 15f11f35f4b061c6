# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Permutations avoiding blocks, and maps avoiding position assignments

Two constraint families share the inclusion-exclusion machinery:

* forbidden contiguous blocks: C(i) says the block i does not occur in the
  permutation; N(U) counts permutations containing every block in U.
* disjunctions of inequalities: the negation of C(i) fixes a few positions,
  N(U) counts maps (injective or arbitrary) honouring all of them.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import factorial, perm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from iex.engine import ie_counter, upgrade_a
from iex.errors import AdmissibilityError, ParseError
from iex.exclusion import ClashGraph, GeneratorSet, ab_algorithm, n_algorithm
from iex.rows import Face, RowUnion

logger = logging.getLogger(__name__)

_PAIR = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")


@dataclass(frozen=True)
class BlockSpec:
    """Permutations of [n] with forbidden contiguous blocks"""

    n: int
    blocks: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Invalid n: {self.n}")
        blocks = tuple(tuple(b) for b in self.blocks)
        for b in blocks:
            if len(b) < 2:
                raise ValueError(f"Block {b} must hold at least 2 symbols")
            if len(set(b)) != len(b):
                raise ValueError(f"Block {b} repeats a symbol")
            for x in b:
                if not isinstance(x, int) or not 1 <= x <= self.n:
                    raise ValueError(f"Block symbol {x!r} outside [1, {self.n}]")
        object.__setattr__(self, "blocks", blocks)

    @property
    def h(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class MergeResult:
    """Superblocks obtained by gluing a set of blocks together

    sigma: number of symbols covered; paths: the merged chains
    """

    feasible: bool
    paths: Tuple[Tuple[int, ...], ...] = ()
    sigma: int = 0

    @property
    def p(self) -> int:
        return len(self.paths)


_INFEASIBLE = MergeResult(False)


def merge_blocks(spec: BlockSpec, u) -> MergeResult:
    """Glue the blocks indexed by u through their successor relation

    Infeasible when a symbol gets two successors or two predecessors, or when
    the relation closes a cycle.
    """
    succ: Dict[int, int] = {}
    pred: Dict[int, int] = {}
    for i in sorted(u):
        block = spec.blocks[i - 1]
        for x, y in zip(block, block[1:]):
            if succ.get(x, y) != y or pred.get(y, x) != x:
                return _INFEASIBLE
            succ[x] = y
            pred[y] = x
    symbols = set(succ) | set(pred)
    paths = []
    covered = 0
    for start in sorted(symbols - set(pred)):
        path = [start]
        while path[-1] in succ:
            path.append(succ[path[-1]])
        paths.append(tuple(path))
        covered += len(path)
    if covered != len(symbols):
        # some symbols only lie on cycles
        return _INFEASIBLE
    return MergeResult(True, tuple(paths), len(symbols))


def block_feasible(spec: BlockSpec, u) -> bool:
    return merge_blocks(spec, u).feasible


def block_face_count(spec: BlockSpec, u) -> int:
    """Permutations containing every block of u: (n - sigma + p)!"""
    merged = merge_blocks(spec, u)
    if not merged.feasible:
        return 0
    return factorial(spec.n - merged.sigma + merged.p)


def block_sf_generators(spec: BlockSpec) -> GeneratorSet:
    """Minimal infeasible block sets, found level by level

    A k-set is a candidate only when all its (k-1)-subsets are feasible, so an
    infeasible candidate is minimal.
    """
    h = spec.h
    level = [frozenset()]
    generators = []
    for k in range(1, h + 1):
        known = set(level)
        next_level = []
        for base in level:
            top = max(base, default=0)
            for j in range(top + 1, h + 1):
                cand = base | {j}
                if any(cand - {i} not in known for i in base):
                    continue
                if block_feasible(spec, cand):
                    next_level.append(cand)
                else:
                    generators.append(cand)
        logger.debug(
            "Level %d: %d feasible, %d generators so far",
            k,
            len(next_level),
            len(generators),
        )
        if not next_level:
            break
        level = next_level
    return GeneratorSet(h, tuple(generators))


class block_perm(ie_counter):
    """Permutations of [n] that contain none of the blocks"""

    def __init__(self, spec: BlockSpec):
        self.spec = spec
        self._generators = None

    @property
    def generators(self) -> GeneratorSet:
        """generators: Minimal infeasible block sets"""
        if self._generators is None:
            self._generators = block_sf_generators(self.spec)
        return self._generators

    def _relevant_rows(self) -> RowUnion:
        return n_algorithm(self.generators)

    def _face_count(self, u: Face) -> int:
        return block_face_count(self.spec, u)


def count_block_avoiding_permutations(spec: BlockSpec, threads=1) -> int:
    counter = block_perm(spec)
    counter.threads = threads
    return counter.count()


class MapMode(Enum):
    INJECTIVE = "injective"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True)
class AssignConstraint:
    """Negation of one disjunction: the (position, value) pairs it fixes"""

    pairs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((int(p), int(v)) for p, v in self.pairs)
        if not pairs:
            raise ValueError("Constraint fixes no position")
        positions = [p for p, _ in pairs]
        if len(set(positions)) != len(positions):
            raise ValueError(f"Constraint {sorted(pairs)} fixes a position twice")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, *pairs):
        return cls(frozenset(pairs))

    @property
    def positions(self) -> FrozenSet[int]:
        return frozenset(p for p, _ in self.pairs)

    @property
    def values(self) -> FrozenSet[int]:
        return frozenset(v for _, v in self.pairs)

    def __len__(self):
        return len(self.pairs)


def _clash(c1: AssignConstraint, c2: AssignConstraint, mode: MapMode) -> bool:
    for p1, v1 in c1.pairs:
        for p2, v2 in c2.pairs:
            if p1 == p2 and v1 != v2:
                return True
            if mode is MapMode.INJECTIVE and v1 == v2 and p1 != p2:
                return True
    return False


def check_admissible(constraints: Sequence[AssignConstraint], mode: MapMode):
    """Raise AdmissibilityError unless upgrade A applies

    Requires equal constraint sizes, no (position, value) pair shared by two
    constraints and, for injective maps, distinct values within a constraint.
    """
    sizes = {len(c) for c in constraints}
    if len(sizes) > 1:
        raise AdmissibilityError(f"Constraints of mixed sizes {sorted(sizes)}")
    seen = set()
    for i, c in enumerate(constraints, 1):
        if mode is MapMode.INJECTIVE and len(c.values) != len(c):
            raise AdmissibilityError(f"Constraint {i} fixes one value twice")
        shared = seen & c.pairs
        if shared:
            raise AdmissibilityError(
                f"Pair {sorted(shared)[0]} occurs in more than one constraint"
            )
        seen |= c.pairs


def clash_graph(
    constraints: Sequence[AssignConstraint], mode: MapMode, strict=True
) -> ClashGraph:
    """Graph on the constraints, adjacent when their negations cannot hold
    together (one position two values, or for injective maps one value at two
    positions).
    """
    if strict:
        check_admissible(constraints, mode)
    edges = [
        (i, j)
        for (i, c1), (j, c2) in combinations(enumerate(constraints, 1), 2)
        if _clash(c1, c2, mode)
    ]
    return ClashGraph(len(constraints), edges)


def merged_assignment(
    constraints: Sequence[AssignConstraint], u, mode: MapMode
) -> Optional[Dict[int, int]]:
    """Position to value map fixed by the negations in u, None on a clash"""
    assignment: Dict[int, int] = {}
    used: Dict[int, int] = {}
    for i in sorted(u):
        for p, v in constraints[i - 1].pairs:
            if assignment.get(p, v) != v:
                return None
            if mode is MapMode.INJECTIVE and used.get(v, p) != p:
                return None
            assignment[p] = v
            used[v] = p
    return assignment


class constrained_maps(ie_counter):
    """Maps [n] -> [m] satisfying every disjunction of inequalities

    Upgrade A is used when the constraints are admissible; otherwise the
    relevant faces are scanned one by one.
    """

    def __init__(
        self,
        constraints: Sequence[AssignConstraint],
        n,
        m=None,
        mode: MapMode = MapMode.INJECTIVE,
    ):
        self.constraints = tuple(constraints)
        self.n = n
        self.m = n if m is None else m
        self.mode = mode
        for c in self.constraints:
            for p, v in c.pairs:
                if not 1 <= p <= self.n:
                    raise ValueError(f"Position {p} outside [1, {self.n}]")
                if not 1 <= v <= self.m:
                    raise ValueError(f"Value {v} outside [1, {self.m}]")
        try:
            check_admissible(self.constraints, mode)
            self._admissible = True
        except AdmissibilityError as ex:
            logger.warning("Falling back to upgrade B: %s", ex)
            self._admissible = False
        self._graph = clash_graph(self.constraints, mode, strict=False)

    @property
    def admissible(self) -> bool:
        """admissible: True when upgrade A applies"""
        return self._admissible

    @property
    def graph(self) -> ClashGraph:
        """graph: Clash graph of the constraints"""
        return self._graph

    def _maps_fixing(self, fixed) -> int:
        if self.mode is MapMode.INJECTIVE:
            return perm(self.m - fixed, self.n - fixed)
        return self.m ** (self.n - fixed)

    def _relevant_rows(self) -> RowUnion:
        return ab_algorithm(self._graph)

    def _face_count(self, u: Face) -> int:
        assignment = merged_assignment(self.constraints, u, self.mode)
        if assignment is None:
            return 0
        return self._maps_fixing(len(assignment))

    def count(self) -> int:
        if not self._admissible:
            return self.scan()
        s = len(self.constraints[0]) if self.constraints else 0
        return upgrade_a(self.face_numbers, lambda k: self._maps_fixing(s * k))


def count_constrained_maps(
    constraints: Sequence[AssignConstraint],
    n,
    m=None,
    mode: MapMode = MapMode.INJECTIVE,
    threads=1,
) -> int:
    counter = constrained_maps(constraints, n, m, mode)
    counter.threads = threads
    return counter.count()


@dataclass(frozen=True)
class MapSpec:
    """Parsed constraint file for maps"""

    n: int
    m: int
    mode: MapMode
    constraints: Tuple[AssignConstraint, ...]


def _symbol(token, n, line, path):
    if token.isdigit():
        return int(token)
    if len(token) == 1 and "a" <= token <= "z":
        return ord(token) - ord("a") + 1
    raise ParseError(
        f"Invalid symbol {token!r}. Must be an integer or a letter",
        n,
        line.find(token) + 1,
        path,
    )


def read_perm_spec(text, path=None) -> Union[BlockSpec, MapSpec]:
    """Parse a permutation constraint file

    Header ``perm n`` (permutations of [n]) or ``maps n m`` (arbitrary maps
    [n] -> [m]), then ``block: s1 s2 ...`` or ``neq: (p1,v1) (p2,v2) ...``
    lines. Letters stand for integers (a = 1, b = 2, ...). ``#`` starts a
    comment.
    """
    header = None
    blocks: List[Tuple[int, ...]] = []
    constraints: List[AssignConstraint] = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if header is None:
            fields = line.split()
            if fields[0] == "perm" and len(fields) == 2 and fields[1].isdigit():
                header = ("perm", int(fields[1]), int(fields[1]))
            elif fields[0] == "maps" and len(fields) == 3 and all(
                f.isdigit() for f in fields[1:]
            ):
                header = ("maps", int(fields[1]), int(fields[2]))
            else:
                raise ParseError("Expected header 'perm n' or 'maps n m'", n, 1, path)
            continue
        keyword, sep, rest = line.partition(":")
        keyword = keyword.strip()
        if not sep or keyword not in ("block", "neq"):
            raise ParseError("Expected 'block:' or 'neq:'", n, 1, path)
        column = len(keyword) + 2
        if keyword == "block":
            if header[0] != "perm":
                raise ParseError("Blocks need a 'perm n' header", n, 1, path)
            symbols = tuple(_symbol(t, n, raw, path) for t in rest.split())
            try:
                blocks.append(BlockSpec(header[1], (symbols,)).blocks[0])
            except ValueError as ex:
                raise ParseError(str(ex), n, column, path) from None
        else:
            pairs = _PAIR.findall(rest)
            leftover = _PAIR.sub("", rest).strip()
            if not pairs or leftover:
                raise ParseError("Expected pairs '(position,value)'", n, column, path)
            try:
                constraints.append(
                    AssignConstraint(
                        frozenset(
                            (_symbol(p, n, raw, path), _symbol(v, n, raw, path))
                            for p, v in pairs
                        )
                    )
                )
            except ValueError as ex:
                if isinstance(ex, ParseError):
                    raise
                raise ParseError(str(ex), n, column, path) from None
    if header is None:
        raise ParseError("Missing header line", 1, 0, path)
    if blocks and constraints:
        raise ParseError("Blocks and neq lines cannot be mixed", 1, 0, path)
    kind, n, m = header
    if kind == "perm" and not constraints:
        return BlockSpec(n, tuple(blocks))
    mode = MapMode.INJECTIVE if kind == "perm" else MapMode.ARBITRARY
    return MapSpec(n, m, mode, tuple(constraints))

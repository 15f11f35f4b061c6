# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Multivalued rows and the set systems they represent

Positions are 1-based throughout. A row of length h stands for a family of
subsets of [h] (equivalently, of bitstrings of length h). Rows are immutable
values; every transform returns a fresh row.

Textual format: one token per position, space separated, ``0 1 2`` for fixed
and free cells, ``n1 n2 ...`` for n-bubbles ("at least one 0"), ``a1 b1 ...``
for the a-position and the b-positions of an anti-implication wildcard.
"""

import itertools
import logging
import re
from dataclasses import dataclass, replace
from functools import cached_property
from math import comb
from typing import FrozenSet, Iterator, List, Optional, Tuple, Union

logger = logging.getLogger(__name__)

_LABEL = re.compile(r"^([nab])(\d*)$")


class Face(frozenset):
    """Face: set of 1-based indices drawn from [h]

    h is optional; when given the elements are range checked and membership
    tests against rows of another length are refused.
    """

    def __new__(cls, elements=(), h=None):
        self = super().__new__(cls, elements)
        if h is not None:
            for i in self:
                if not isinstance(i, int) or not 1 <= i <= h:
                    raise ValueError(f"Face element {i!r} outside [1, {h}]")
        self.h = h
        return self

    @classmethod
    def from_bits(cls, bits):
        """Face from a 0/1 sequence (position 1 first)"""
        return cls((i + 1 for i, b in enumerate(bits) if b), h=len(bits))

    @property
    def bits(self) -> Tuple[int, ...]:
        if self.h is None:
            raise ValueError("Face has no ambient size h")
        return tuple(1 if i in self else 0 for i in range(1, self.h + 1))

    def __repr__(self):
        return f"Face({sorted(self)}, h={self.h})"


def _face(elements, h):
    # unchecked constructor for enumeration loops
    f = frozenset.__new__(Face, elements)
    f.h = h
    return f


def as_face(u, h) -> FrozenSet[int]:
    """Normalize a membership query

    Faces and sets are taken as element sets, tuples and lists as bitstrings.
    """
    if isinstance(u, (tuple, list)):
        if len(u) != h:
            raise ValueError(f"Bitstring of length {len(u)} tested against h={h}")
        return Face.from_bits(u)
    if isinstance(u, Face) and u.h is not None and u.h != h:
        raise ValueError(f"Face over h={u.h} tested against h={h}")
    return u


def _check_disjoint_cells(h, groups):
    seen = set()
    for group in groups:
        for i in group:
            if not isinstance(i, int) or not 1 <= i <= h:
                raise ValueError(f"Position {i!r} outside [1, {h}]")
            if i in seen:
                raise ValueError(f"Position {i} carries more than one label")
            seen.add(i)


def _bit_choices(cells):
    """All subsets of cells, lexicographic by position (0 before 1)"""
    cells = sorted(cells)
    for picks in itertools.product((0, 1), repeat=len(cells)):
        yield frozenset(c for c, p in zip(cells, picks) if p)


def _proper_subsets(cells):
    full = frozenset(cells)
    return [s for s in _bit_choices(cells) if s != full]


def _split_tokens(text):
    return text.replace(",", " ").replace("(", " ").replace(")", " ").split()


@dataclass(frozen=True)
class NRow:
    """{0,1,2,n}-valued row

    Represents {U : ones <= U, U & zeros = {}, and no bubble inside U}.
    A bubble of a single position is stored as a fixed 0.
    """

    h: int
    ones: FrozenSet[int] = frozenset()
    zeros: FrozenSet[int] = frozenset()
    bubbles: Tuple[FrozenSet[int], ...] = ()

    def __post_init__(self):
        ones = frozenset(self.ones)
        zeros = frozenset(self.zeros)
        bubbles = []
        for b in self.bubbles:
            b = frozenset(b)
            if not b:
                raise ValueError("Empty n-bubble")
            if len(b) == 1:
                zeros = zeros | b
            else:
                bubbles.append(b)
        _check_disjoint_cells(self.h, [ones, zeros] + bubbles)
        bubbles.sort(key=min)
        object.__setattr__(self, "ones", ones)
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "bubbles", tuple(bubbles))

    @classmethod
    def full(cls, h):
        """All-2 row: the whole powerset of [h]"""
        return cls(h)

    @cached_property
    def twos(self) -> FrozenSet[int]:
        used = self.ones | self.zeros
        used = used.union(*self.bubbles)
        return frozenset(range(1, self.h + 1)) - used

    @property
    def cells(self) -> Tuple[str, ...]:
        tokens = ["2"] * self.h
        for i in self.ones:
            tokens[i - 1] = "1"
        for i in self.zeros:
            tokens[i - 1] = "0"
        for j, b in enumerate(self.bubbles, 1):
            for i in b:
                tokens[i - 1] = f"n{j}"
        return tuple(tokens)

    def bubble_of(self, pos) -> Optional[FrozenSet[int]]:
        for b in self.bubbles:
            if pos in b:
                return b
        return None

    def cardinality(self) -> int:
        total = 2 ** len(self.twos)
        for b in self.bubbles:
            total *= 2 ** len(b) - 1
        return total

    def contains(self, u) -> bool:
        u = as_face(u, self.h)
        if not self.ones <= u or self.zeros & u:
            return False
        return not any(b <= u for b in self.bubbles)

    def enumerate(self) -> Iterator[Face]:
        """Members in lexicographic order of positions, bubbles expanded last"""
        bubble_choices = [_proper_subsets(b) for b in self.bubbles]
        for base in _bit_choices(self.twos):
            base = self.ones | base
            for chosen in itertools.product(*bubble_choices):
                yield _face(base.union(*chosen), self.h)

    def render(self) -> str:
        return " ".join(self.cells)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class TernaryRow:
    """{0,1,2}-valued row: an interval of the Boolean lattice"""

    cells: Tuple[int, ...]

    def __post_init__(self):
        cells = tuple(int(c) for c in self.cells)
        for j, c in enumerate(cells, 1):
            if c not in (0, 1, 2):
                raise ValueError(f"Invalid ternary cell {c} at position {j}")
        object.__setattr__(self, "cells", cells)

    @property
    def h(self) -> int:
        return len(self.cells)

    @cached_property
    def ones(self) -> FrozenSet[int]:
        return frozenset(i for i, c in enumerate(self.cells, 1) if c == 1)

    @cached_property
    def zeros(self) -> FrozenSet[int]:
        return frozenset(i for i, c in enumerate(self.cells, 1) if c == 0)

    @cached_property
    def twos(self) -> FrozenSet[int]:
        return frozenset(i for i, c in enumerate(self.cells, 1) if c == 2)

    @cached_property
    def ones_mask(self) -> int:
        return sum(1 << (i - 1) for i in self.ones)

    @cached_property
    def zeros_mask(self) -> int:
        return sum(1 << (i - 1) for i in self.zeros)

    def cardinality(self) -> int:
        return 2 ** len(self.twos)

    def card_k(self, k) -> int:
        """Number of k-element members"""
        beta, gamma = len(self.ones), len(self.twos)
        if beta <= k <= beta + gamma:
            return comb(gamma, k - beta)
        return 0

    def contains(self, u) -> bool:
        u = as_face(u, self.h)
        return self.ones <= u and not self.zeros & u

    def intersect(self, other) -> Optional["TernaryRow"]:
        """Componentwise meet; None when the rows clash"""
        if self.h != other.h:
            raise ValueError(
                f"Cannot intersect rows of length {self.h} and {other.h}"
            )
        cells = []
        for x, y in zip(self.cells, other.cells):
            if x == 2:
                cells.append(y)
            elif y == 2 or x == y:
                cells.append(x)
            else:
                return None
        return TernaryRow(tuple(cells))

    def render(self) -> str:
        return " ".join(str(c) for c in self.cells)

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(t) for t in _split_tokens(text)))


@dataclass(frozen=True)
class ABRow:
    """{0,1,2,a,b}-valued row

    Each wildcard (a, B) is the anti-implication "a in U implies U & B = {}".
    Every position carries at most one label.
    """

    h: int
    ones: FrozenSet[int] = frozenset()
    zeros: FrozenSet[int] = frozenset()
    wildcards: Tuple[Tuple[int, FrozenSet[int]], ...] = ()

    def __post_init__(self):
        ones = frozenset(self.ones)
        zeros = frozenset(self.zeros)
        wildcards = []
        for a, b in self.wildcards:
            b = frozenset(b)
            if not b:
                raise ValueError(f"Wildcard at a-position {a} has no b-positions")
            wildcards.append((a, b))
        groups = [ones, zeros] + [{a} for a, _ in wildcards]
        groups += [b for _, b in wildcards]
        _check_disjoint_cells(self.h, groups)
        wildcards.sort()
        object.__setattr__(self, "ones", ones)
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "wildcards", tuple(wildcards))

    @classmethod
    def full(cls, h):
        return cls(h)

    @cached_property
    def labeled(self) -> FrozenSet[int]:
        cells = set()
        for a, b in self.wildcards:
            cells.add(a)
            cells |= b
        return frozenset(cells)

    @cached_property
    def twos(self) -> FrozenSet[int]:
        used = self.ones | self.zeros | self.labeled
        return frozenset(range(1, self.h + 1)) - used

    @property
    def cells(self) -> Tuple[str, ...]:
        tokens = ["2"] * self.h
        for i in self.ones:
            tokens[i - 1] = "1"
        for i in self.zeros:
            tokens[i - 1] = "0"
        for j, (a, b) in enumerate(self.wildcards, 1):
            tokens[a - 1] = f"a{j}"
            for i in b:
                tokens[i - 1] = f"b{j}"
        return tuple(tokens)

    def cardinality(self) -> int:
        total = 2 ** len(self.twos)
        for _, b in self.wildcards:
            total *= 2 ** len(b) + 1
        return total

    def contains(self, u) -> bool:
        u = as_face(u, self.h)
        if not self.ones <= u or self.zeros & u:
            return False
        return not any(a in u and b & u for a, b in self.wildcards)

    def enumerate(self) -> Iterator[Face]:
        """Members, lexicographic over free cells, wildcards expanded last

        Within a wildcard the a = 0 branch comes first.
        """
        wildcard_choices = [
            list(_bit_choices(b)) + [frozenset((a,))] for a, b in self.wildcards
        ]
        for base in _bit_choices(self.twos):
            base = self.ones | base
            for chosen in itertools.product(*wildcard_choices):
                yield _face(base.union(*chosen), self.h)

    def expand(self) -> List[NRow]:
        """Disjoint {0,1,2}-valued rows with the same union"""
        rows = [NRow(self.h, self.ones, self.zeros)]
        for a, b in self.wildcards:
            branched = []
            for r in rows:
                branched.append(replace(r, zeros=r.zeros | {a}))
                branched.append(replace(r, ones=r.ones | {a}, zeros=r.zeros | b))
            rows = branched
        return rows

    def assign(self, pos, value) -> Optional["ABRow"]:
        """Fix one position to 0 or 1, resolving the wildcard it belongs to

        Returns None when the assignment empties the row.
        """
        if pos in self.ones:
            return self if value else None
        if pos in self.zeros:
            return None if value else self
        ones, zeros = set(self.ones), set(self.zeros)
        wildcards = []
        for a, b in self.wildcards:
            if pos == a:
                if value:
                    ones.add(a)
                    zeros |= b
                else:
                    zeros.add(a)
            elif pos in b:
                if value:
                    ones.add(pos)
                    zeros.add(a)
                else:
                    zeros.add(pos)
                    if len(b) > 1:
                        wildcards.append((a, b - {pos}))
            else:
                wildcards.append((a, b))
        if pos not in ones and pos not in zeros:
            (ones if value else zeros).add(pos)
        return ABRow(self.h, frozenset(ones), frozenset(zeros), tuple(wildcards))

    def with_wildcard(self, a, b) -> "ABRow":
        return ABRow(self.h, self.ones, self.zeros, self.wildcards + ((a, b),))

    def render(self) -> str:
        return " ".join(self.cells)

    def __str__(self):
        return self.render()


Row = Union[NRow, ABRow]


@dataclass(frozen=True)
class RowUnion:
    """Disjoint union of rows sharing the ambient size h"""

    h: int
    rows: Tuple[Row, ...] = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        for r in rows:
            if r.h != self.h:
                raise ValueError(f"Row of length {r.h} in a union over h={self.h}")
        object.__setattr__(self, "rows", rows)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def cardinality(self) -> int:
        return sum(r.cardinality() for r in self.rows)

    def contains(self, u) -> bool:
        u = as_face(u, self.h)
        return any(r.contains(u) for r in self.rows)

    def enumerate(self) -> Iterator[Face]:
        for r in self.rows:
            yield from r.enumerate()

    def expand(self) -> "RowUnion":
        """Same family with every ABRow replaced by its NRow expansion"""
        rows = []
        for r in self.rows:
            rows.extend(r.expand() if isinstance(r, ABRow) else [r])
        return RowUnion(self.h, tuple(rows))

    def render(self) -> str:
        return "\n".join(r.render() for r in self.rows)


def parse_row(text) -> Row:
    """Parse the textual row format into an NRow or ABRow"""
    tokens = _split_tokens(text)
    h = len(tokens)
    ones, zeros = set(), set()
    groups = {}
    for i, token in enumerate(tokens, 1):
        if token == "1":
            ones.add(i)
        elif token == "0":
            zeros.add(i)
        elif token == "2":
            continue
        else:
            match = _LABEL.match(token)
            if not match:
                raise ValueError(f"Invalid row token {token!r} at position {i}")
            groups.setdefault((match.group(1), match.group(2)), []).append(i)
    kinds = {kind for kind, _ in groups}
    if not kinds & {"a", "b"}:
        bubbles = tuple(frozenset(v) for v in groups.values())
        return NRow(h, frozenset(ones), frozenset(zeros), bubbles)
    if "n" in kinds:
        raise ValueError("A row cannot mix n-bubbles with a/b wildcards")
    wildcards = []
    for (kind, label), cells in groups.items():
        if kind != "a":
            continue
        if len(cells) != 1:
            raise ValueError(f"Wildcard a{label} has {len(cells)} a-positions")
        if ("b", label) not in groups:
            raise ValueError(f"Wildcard a{label} has no b-positions")
        wildcards.append((cells[0], frozenset(groups[("b", label)])))
    for kind, label in groups:
        if kind == "b" and ("a", label) not in groups:
            raise ValueError(f"b{label} positions without an a-position")
    return ABRow(h, frozenset(ones), frozenset(zeros), tuple(wildcards))


def nrow_cardinality(r: NRow) -> int:
    return r.cardinality()


def nrow_contains(r: NRow, u) -> bool:
    return r.contains(u)


def nrow_enumerate(r: NRow) -> Iterator[Face]:
    return r.enumerate()


def ternary_intersect(p: TernaryRow, q: TernaryRow) -> Optional[TernaryRow]:
    return p.intersect(q)


def abrow_expand(r: ABRow) -> List[NRow]:
    return r.expand()


def _rows_meet(p, q) -> bool:
    # every row kind is "ones <= U" intersected with a down-closed family,
    # so two rows meet iff they share the smallest candidate
    witness = p.ones | q.ones
    return p.contains(witness) and q.contains(witness)


def check_disjoint(union: RowUnion, brute=False, max_h=20) -> bool:
    """True when no set lies in two rows of the union

    brute=True decides by enumerating every member (h <= max_h only).
    """
    rows = union.rows
    if brute:
        if union.h > max_h:
            raise ValueError(f"Brute-force disjointness check limited to h <= {max_h}")
        seen = set()
        for face in union.enumerate():
            if face in seen:
                logger.debug("Face %s lies in two rows", sorted(face))
                return False
            seen.add(face)
        return True
    for i, p in enumerate(rows):
        for q in rows[i + 1 :]:
            if _rows_meet(p, q):
                logger.debug("Rows %s and %s intersect", p, q)
                return False
    return True

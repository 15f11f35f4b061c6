# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Relevant set ideal construction

The relevant set ideal is the family of all U in P[h] that cover none of the
generators of the irrelevant set filter. It is built as a disjoint union of
multivalued rows, either from generators (n-algorithm) or, when all
generators are edges of a graph, vertex by vertex (ab-algorithm).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from iex.errors import ParseError
from iex.rows import ABRow, NRow, RowUnion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of the irrelevant set filter

    Duplicates are dropped on construction, first occurrence wins.
    """

    h: int
    generators: Tuple[FrozenSet[int], ...] = ()

    def __post_init__(self):
        if self.h < 0:
            raise ValueError(f"Invalid ground set size: {self.h}")
        unique = []
        for g in self.generators:
            g = frozenset(g)
            for i in g:
                if not isinstance(i, int) or not 1 <= i <= self.h:
                    raise ValueError(
                        f"Generator element {i!r} outside [1, {self.h}]"
                    )
            if g not in unique:
                unique.append(g)
        object.__setattr__(self, "generators", tuple(unique))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def minimal(self) -> Tuple[FrozenSet[int], ...]:
        """Generators with no proper subset among the others"""
        return tuple(
            g for g in self.generators if not any(o < g for o in self.generators)
        )

    def covers(self, u) -> bool:
        """True when u contains some generator"""
        return any(g <= u for g in self.generators)

    def render(self) -> str:
        lines = [f"{self.h} {len(self.generators)}"]
        lines += [" ".join(str(i) for i in sorted(g)) for g in self.generators]
        return "\n".join(lines) + "\n"


class ClashGraph:
    """Simple undirected graph on the vertices 1..h"""

    def __init__(self, h, edges: Iterable[Tuple[int, int]] = ()):
        if h < 0:
            raise ValueError(f"Invalid vertex count: {h}")
        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(1, h + 1))
        for u, v in edges:
            if u == v:
                raise ValueError(f"Loop at vertex {u}")
            for w in (u, v):
                if w not in self._graph:
                    raise ValueError(f"Vertex {w} outside [1, {h}]")
            self._graph.add_edge(u, v)
        self._h = h

    @property
    def h(self) -> int:
        """h: Number of vertices"""
        return self._h

    @property
    def graph(self) -> nx.Graph:
        """graph: Underlying networkx graph"""
        return self._graph

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """edges: Sorted list of (u, v) with u < v"""
        return sorted(tuple(sorted(e)) for e in self._graph.edges)

    def neighbors(self, v) -> FrozenSet[int]:
        return frozenset(self._graph.adj[v])

    def degree(self, v) -> int:
        return self._graph.degree[v]

    def is_anticlique(self, u) -> bool:
        return self._graph.subgraph(u).number_of_edges() == 0

    def __repr__(self):
        return f"ClashGraph({self._h}, {self.edges})"


def impose_noncover(r: NRow, gamma) -> List[NRow]:
    """Split r into disjoint rows covering {U in r : gamma not <= U}

    The twos of gamma become one new bubble. Then, with those twos forced to
    1, each bubble part of gamma in turn is required to hold a 0 while the
    earlier parts are forced to 1 (candidate sons).
    """
    gamma = frozenset(gamma)
    if not gamma:
        raise ValueError("Noncover constraint needs a nonempty set")
    if not gamma <= frozenset(range(1, r.h + 1)):
        raise ValueError(f"Constraint {sorted(gamma)} outside [1, {r.h}]")
    if gamma & r.zeros or any(b <= gamma for b in r.bubbles):
        return [r]
    free = gamma - r.ones
    if not free:
        return []

    sons = []
    twos_part = free & r.twos
    if twos_part:
        sons.append(NRow(r.h, r.ones, r.zeros, r.bubbles + (twos_part,)))

    touched = [(b, b & gamma) for b in r.bubbles if b & gamma]
    untouched = [b for b in r.bubbles if not b & gamma]
    ones = r.ones | twos_part
    shrunk = []
    for i, (bubble, part) in enumerate(touched):
        later = [b for b, _ in touched[i + 1 :]]
        bubbles = tuple(untouched + shrunk + later + [part])
        sons.append(NRow(r.h, ones, r.zeros, bubbles))
        # part all ones from here on; what is left of the bubble keeps a 0
        ones = ones | part
        shrunk.append(bubble - part)
    return sons


def n_algorithm(g: GeneratorSet) -> RowUnion:
    """Relevant set ideal of the generators as a disjoint union of NRows

    Generators are imposed in order on a LIFO worklist of rows.
    """
    generators = g.minimal()
    if any(not gen for gen in generators):
        logger.info("Empty generator: the relevant set ideal is empty")
        return RowUnion(g.h, ())
    final = []
    stack = [(NRow.full(g.h), 0)]
    while stack:
        row, i = stack.pop()
        if i == len(generators):
            final.append(row)
            continue
        sons = impose_noncover(row, generators[i])
        stack.extend((s, i + 1) for s in reversed(sons))
        logger.debug("generator %d: %d sons, worklist %d", i + 1, len(sons), len(stack))
    logger.info(
        "n-algorithm: %d generators, %d rows over h=%d",
        len(generators),
        len(final),
        g.h,
    )
    return RowUnion(g.h, tuple(final))


def transversal_count(g: GeneratorSet) -> int:
    """|SC| by splitting on elements, without building rows

    Counts the U in P[h] containing no generator, i.e. the sets whose
    complement is a transversal of the generators.
    """
    generators = frozenset(g.minimal())
    if any(not gen for gen in generators):
        return 0

    @lru_cache(maxsize=None)
    def count(gens):
        if not gens:
            return 1
        if frozenset() in gens:
            return 0
        frequency = {}
        for gen in gens:
            for i in gen:
                frequency[i] = frequency.get(i, 0) + 1
        pivot = max(sorted(frequency), key=frequency.get)
        support = frozenset(frequency)
        # pivot left out: generators through it are satisfied
        rest = frozenset(gen for gen in gens if pivot not in gen)
        freed = len(support) - 1 - len(frozenset().union(*rest))
        excluded = count(rest) * 2 ** freed
        # pivot taken: generators lose it
        shrunk = frozenset(gen - {pivot} for gen in gens)
        shrunk = frozenset(s for s in shrunk if not any(o < s for o in shrunk))
        freed = len(support) - 1 - len(frozenset().union(*shrunk))
        included = count(shrunk) * 2 ** freed
        return excluded + included

    support = frozenset().union(*generators) if generators else frozenset()
    return count(generators) * 2 ** (g.h - len(support))


def relevant_count(g: GeneratorSet, method="rows") -> int:
    """|SC| for the generators

    method: "rows" sums NRow cardinalities of the n-algorithm output,
    "transversal" uses the splitting recursion.
    """
    if method == "rows":
        return n_algorithm(g).cardinality()
    if method == "transversal":
        return transversal_count(g)
    raise ValueError(f"Invalid method: {method}. Must be rows or transversal")


def _impose_anti(row: ABRow, v, targets) -> List[ABRow]:
    """Rows of {U in row : v in U implies U & targets = {}}"""
    if v in row.labeled:
        out = []
        for value in (0, 1):
            fixed = row.assign(v, value)
            if fixed is not None:
                out.extend(_impose_anti(fixed, v, targets))
        return out
    if v in row.zeros:
        return [row]
    if v in row.ones:
        for w in sorted(targets):
            row = row.assign(w, 0)
            if row is None:
                return []
        return [row]
    # v is a free cell
    if targets & row.ones:
        return [row.assign(v, 0)]
    live = targets - row.zeros
    if not live:
        return [row]
    if not live & row.labeled:
        return [row.with_wildcard(v, live)]
    return [row.assign(v, 0)] + _impose_anti(row.assign(v, 1), v, targets)


def ab_algorithm(
    g: ClashGraph, prune: Optional[Callable[[ABRow], bool]] = None
) -> RowUnion:
    """Anticliques of g as a disjoint union of ABRows

    Vertices are processed by descending degree; each contributes the
    anti-implication towards its not yet processed neighbours. prune, when
    given, is called on every intermediate row and rows for which it returns
    False are dropped together with everything they would split into.
    """
    order = sorted(range(1, g.h + 1), key=lambda v: (-g.degree(v), v))
    rows = [ABRow.full(g.h)]
    done = set()
    for v in order:
        targets = g.neighbors(v) - done
        done.add(v)
        if not targets:
            continue
        split = []
        for row in rows:
            split.extend(_impose_anti(row, v, targets))
        if prune is not None:
            split = [r for r in split if prune(r)]
        rows = split
        logger.debug("ab-algorithm: vertex %d, %d rows", v, len(rows))
    logger.info("ab-algorithm: %d rows over h=%d", len(rows), g.h)
    return RowUnion(g.h, tuple(rows))


def anticliques_via_edges(g: ClashGraph) -> RowUnion:
    """Anticliques of g by feeding its edges to the n-algorithm"""
    return n_algorithm(GeneratorSet(g.h, tuple(frozenset(e) for e in g.edges)))


def read_generators(text, path=None) -> GeneratorSet:
    """Parse the generator file format

    First line "h m", then m lines of space separated 1-based indices.
    Blank lines and lines starting with # are ignored.
    """
    lines = [
        (n, line)
        for n, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("Missing header line 'h m'", 1, 0, path)
    n, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError("Header must be 'h m'", n, 1, path)
    h, m = (_parse_int(f, n, header, path) for f in fields)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(
            f"Header announces {m} generators, found {len(body)}", n, 0, path
        )
    generators = []
    for n, line in body:
        gen = set()
        for token in line.split():
            i = _parse_int(token, n, line, path)
            if not 1 <= i <= h:
                raise ParseError(
                    f"Index {i} outside [1, {h}]", n, line.index(token) + 1, path
                )
            gen.add(i)
        generators.append(frozenset(gen))
    return GeneratorSet(h, tuple(generators))


def _parse_int(token, n, line, path):
    try:
        return int(token)
    except ValueError:
        raise ParseError(
            f"Expected an integer, got {token!r}", n, line.index(token) + 1, path
        ) from None


def minimal_generators(g: GeneratorSet) -> GeneratorSet:
    """Same filter, generated by its minimal members only"""
    return GeneratorSet(g.h, g.minimal())


def write_generators(g: GeneratorSet) -> str:
    return g.render()

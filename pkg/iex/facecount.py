# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Face numbers and parity-weight tables of row unions

Every row is a product of independent cell factors, so its face polynomial
(and its bivariate parity-weight polynomial) is the product of per-cell
polynomials. x-exponents of the bivariate form are kept modulo 2.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Sequence, Tuple

from iex.rows import ABRow, NRow, RowUnion

logger = logging.getLogger(__name__)

WeightVector = Sequence[int]


@dataclass(frozen=True)
class FaceVector:
    """f(k) = number of k-element faces, k = 0..h"""

    f: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(c) for c in self.f))
        if any(c < 0 for c in self.f):
            raise ValueError(f"Negative face number in {self.f}")

    @classmethod
    def zeros(cls, h):
        return cls((0,) * (h + 1))

    @property
    def h(self) -> int:
        return len(self.f) - 1

    def __getitem__(self, k):
        return self.f[k]

    def __len__(self):
        return len(self.f)

    def __iter__(self):
        return iter(self.f)

    def __add__(self, other):
        if len(self) != len(other):
            raise ValueError(f"Cannot add face vectors over h={self.h} and {other.h}")
        return FaceVector(tuple(a + b for a, b in zip(self.f, other.f)))

    def total(self) -> int:
        return sum(self.f)

    @property
    def even(self) -> Dict[int, int]:
        """Nonzero f(k) for even k"""
        return {k: c for k, c in enumerate(self.f) if c and k % 2 == 0}

    @property
    def odd(self) -> Dict[int, int]:
        """Nonzero f(k) for odd k"""
        return {k: c for k, c in enumerate(self.f) if c and k % 2 == 1}

    def __str__(self):
        return " ".join(str(c) for c in self.f)


@dataclass
class ParityWeightTable:
    """Standard form c(y) + x d(y) of a bivariate face polynomial

    c[v] counts even-cardinality faces of weight v, d[v] the odd ones.
    """

    c: Dict[int, int] = field(default_factory=dict)
    d: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.c = {v: n for v, n in sorted(self.c.items()) if n}
        self.d = {v: n for v, n in sorted(self.d.items()) if n}
        for v, n in list(self.c.items()) + list(self.d.items()):
            if v < 0 or n < 0:
                raise ValueError(f"Invalid table entry {v}: {n}")

    @property
    def weights(self) -> List[int]:
        """Occurring weights, ascending"""
        return sorted(set(self.c) | set(self.d))

    def total(self) -> int:
        return sum(self.c.values()) + sum(self.d.values())

    def __add__(self, other):
        return ParityWeightTable(_sum_maps(self.c, other.c), _sum_maps(self.d, other.d))


def _sum_maps(p, q):
    out = dict(p)
    for v, n in q.items():
        out[v] = out.get(v, 0) + n
    return out


# univariate polynomials: lists of coefficients, lowest degree first


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _add(p, q):
    if len(p) < len(q):
        p, q = q, p
    return [a + (q[i] if i < len(q) else 0) for i, a in enumerate(p)]


def _binomial_row(t):
    return [comb(t, k) for k in range(t + 1)]


def row_face_polynomial(r) -> FaceVector:
    """Card(r, k) for k = 0..h

    Factors: x per 1-cell, (1 + x) per 2-cell, (1 + x)^t - x^t per bubble of
    length t, and (1 + x)^|B| + x per wildcard (a, B).
    """
    poly = [0] * len(r.ones) + [1]
    poly = _mul(poly, _binomial_row(len(r.twos)))
    if isinstance(r, NRow):
        for bubble in r.bubbles:
            factor = _binomial_row(len(bubble))
            factor[-1] -= 1
            poly = _mul(poly, factor)
    elif isinstance(r, ABRow):
        for _, b in r.wildcards:
            poly = _mul(poly, _add(_binomial_row(len(b)), [0, 1]))
    else:
        raise TypeError(f"Unsupported row type: {type(r).__name__}")
    poly = poly + [0] * (r.h + 1 - len(poly))
    return FaceVector(tuple(poly[: r.h + 1]))


def union_face_numbers(u: RowUnion) -> FaceVector:
    """f(k) of a disjoint union: sum of the row vectors"""
    total = FaceVector.zeros(u.h)
    for r in u:
        total = total + row_face_polynomial(r)
    logger.debug("Face numbers over %d rows: %s", len(u), total)
    return total


# bivariate polynomials: {(x-parity, y-exponent): coefficient}

_ONE = {(0, 0): 1}


def _bmul(p, q):
    out = {}
    for (px, py), a in p.items():
        for (qx, qy), b in q.items():
            key = ((px + qx) % 2, py + qy)
            out[key] = out.get(key, 0) + a * b
    return {k: n for k, n in out.items() if n}


def _cell(weight):
    # 1 + x y^weight
    return {(0, 0): 1, (1, weight): 1}


def _free_product(cells, w):
    poly = dict(_ONE)
    for j in sorted(cells):
        poly = _bmul(poly, _cell(w[j - 1]))
    return poly


def _check_weights(w, h):
    w = tuple(w)
    if len(w) != h:
        raise ValueError(f"Weight vector of length {len(w)} for h={h}")
    for a in w:
        if not isinstance(a, int) or a < 0:
            raise ValueError(f"Invalid weight {a!r}. Must be a nonnegative integer")
    return w


def row_parity_weight_polynomial(r, w: WeightVector) -> ParityWeightTable:
    """Parity-weight table of one row

    Factors: x y^a_j per 1-cell, 1 + x y^a_j per 2-cell, the product over a
    bubble S minus its full term x^|S| y^(sum a_j), and for a wildcard (a, B)
    the product over B plus x y^a_a.
    """
    w = _check_weights(w, r.h)
    poly = {(len(r.ones) % 2, sum(w[j - 1] for j in r.ones)): 1}
    poly = _bmul(poly, _free_product(r.twos, w))
    if isinstance(r, NRow):
        for bubble in r.bubbles:
            factor = _free_product(bubble, w)
            full = (len(bubble) % 2, sum(w[j - 1] for j in bubble))
            factor[full] -= 1
            poly = _bmul(poly, {k: n for k, n in factor.items() if n})
    elif isinstance(r, ABRow):
        for a, b in r.wildcards:
            factor = _free_product(b, w)
            key = (1, w[a - 1])
            factor[key] = factor.get(key, 0) + 1
            poly = _bmul(poly, factor)
    else:
        raise TypeError(f"Unsupported row type: {type(r).__name__}")
    return ParityWeightTable(
        {v: n for (x, v), n in poly.items() if x == 0},
        {v: n for (x, v), n in poly.items() if x == 1},
    )


def union_parity_weight(u: RowUnion, w: WeightVector) -> ParityWeightTable:
    """Parity-weight table of a disjoint union: sum of the row tables"""
    total = ParityWeightTable()
    for r in u:
        total = total + row_parity_weight_polynomial(r, w)
    logger.debug("Parity-weight table over %d rows: %s", len(u), total)
    return total

from itertools import combinations

import pytest

from iex.exclusion import ClashGraph, GeneratorSet
from iex.rows import ABRow, NRow, TernaryRow


def pytest_configure(config):
    # Add custom marks to ini to remove warnings
    config.addinivalue_line(
        "markers", "slow: exhaustive oracle scans over 10! permutations or more"
    )


def pytest_addoption(parser):
    parser.addoption(
        "--slow", action="store_true", help="Run the exhaustive oracle scans",
    )
    parser.addoption(
        "--seed", type=int, default=2026, help="Seed for the random instances",
    )


def pytest_runtest_setup(item):
    slow = item.config.getoption("--slow")
    marks = [mark.name for mark in item.iter_markers()]
    if not slow and "slow" in marks:
        pytest.skip("Exhaustive oracle scans disabled. Use --slow flag to enable")


#########################################
# Random instances


def random_generator_set(rng, h, m, max_size=3):
    generators = []
    for _ in range(m):
        size = rng.randint(1, min(max_size, h))
        generators.append(frozenset(rng.sample(range(1, h + 1), size)))
    return GeneratorSet(h, tuple(generators))


def random_graph(rng, h, p=0.4):
    edges = [e for e in combinations(range(1, h + 1), 2) if rng.random() < p]
    return ClashGraph(h, edges)


def random_nrow(rng, h):
    ones, zeros, bubbles = set(), set(), {1: set(), 2: set()}
    for i in range(1, h + 1):
        kind = rng.choice("012nn")
        if kind == "1":
            ones.add(i)
        elif kind == "0":
            zeros.add(i)
        elif kind == "n":
            bubbles[rng.randint(1, 2)].add(i)
    return NRow(
        h,
        frozenset(ones),
        frozenset(zeros),
        tuple(frozenset(b) for b in bubbles.values() if b),
    )


def random_abrow(rng, h):
    free = list(range(1, h + 1))
    rng.shuffle(free)
    wildcards = []
    for _ in range(rng.randint(0, 2)):
        if len(free) < 2:
            break
        a = free.pop()
        size = rng.randint(1, min(3, len(free)))
        wildcards.append((a, frozenset(free.pop() for _ in range(size))))
    ones, zeros = set(), set()
    for i in free:
        kind = rng.choice("0122")
        if kind == "1":
            ones.add(i)
        elif kind == "0":
            zeros.add(i)
    return ABRow(h, frozenset(ones), frozenset(zeros), tuple(wildcards))


def random_term(rng, n):
    return TernaryRow(tuple(rng.choice((0, 1, 2, 2, 2)) for _ in range(n)))


"""Seed-deterministic random generators for graphs, point sets and networks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Union

from .graphs import Graph, make_graph
from .relalg import Network, RelationAlgebra, make_network, ra_56_65
from .sigma import sigma_model
from .signed import SignedGraph, switch

__all__ = [
    "rng_from",
    "random_graph",
    "random_angles",
    "random_network",
    "random_balanced_signed",
]

Seed = Union[int, random.Random]


def rng_from(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed: Seed) -> Graph:
    """G(n, p) with a fixed pair order, so outputs depend only on the seed."""
    rng = rng_from(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return make_graph(n, edges)


def random_angles(
    count: int, seed: Seed, max_den: int = 48
) -> list[Fraction]:
    """`count` distinct rational turns with denominators up to max_den."""
    rng = rng_from(seed)
    out: list[Fraction] = []
    seen: set[Fraction] = set()
    guard = 0
    while len(out) < count:
        den = rng.randint(1, max_den)
        a = Fraction(rng.randrange(den), den)
        if a not in seen:
            seen.add(a)
            out.append(a)
        guard += 1
        if guard > 1000 * max(count, 1):
            raise ValueError("not enough distinct angles below the denominator cap")
    return out


def random_network(
    n: int,
    seed: Seed,
    algebra: Optional[RelationAlgebra] = None,
    empty_chance: float = 0.0,
) -> Network:
    """A random network: every off-diagonal pair gets a random non-empty
    atom set (or, with `empty_chance`, an empty one)."""
    ra = ra_56_65() if algebra is None else algebra
    rng = rng_from(seed)
    k = len(ra.atoms)
    cons = {}
    for i in range(n):
        for j in range(i + 1, n):
            if empty_chance and rng.random() < empty_chance:
                cons[(i, j)] = 0
                continue
            cons[(i, j)] = rng.randint(1, (1 << k) - 1)
    return make_network(ra, n, cons)


def random_balanced_signed(n: int, seed: Seed, max_den: int = 48) -> SignedGraph:
    """A random consistent signed graph: a labelled circle model, then a
    random switch (which preserves every cycle sum)."""
    rng = rng_from(seed)
    pts = random_angles(n, rng, max_den)
    sg = sigma_model(pts)
    s = [v for v in range(n) if rng.random() < 0.5]
    return switch(sg, s)

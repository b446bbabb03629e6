"""Circular chromatic number below 3, decided by circular-clique homomorphisms.

The value search scans reduced fractions p/q in ascending order with
p bounded by the vertex count (the standard attainment bound, imported
background rather than anything this library derives); the bound is a
parameter for callers who want a different cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Optional

from .circle import CircleKind, THIRD, circ_dist, induced_model
from .errors import InternalInvariantViolationError, VertexOutOfRangeError
from .graphs import Graph, complement, make_graph
from .signed import ANTI_EVEN, find_balancing

__all__ = [
    "CircularClique",
    "circular_clique",
    "find_homomorphism",
    "ChiWitness",
    "chi_c_less_than_3",
    "circular_chromatic_number",
]


@dataclass(frozen=True)
class CircularClique:
    """K_{p/q}: vertices 0..p-1, edges at circular index distance in [q, p-q]."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1 or self.p < 2 * self.q:
            raise VertexOutOfRangeError(f"need p >= 2q >= 2, got ({self.p}, {self.q})")

    @property
    def reduced(self) -> tuple[int, int]:
        g = gcd(self.p, self.q)
        return self.p // g, self.q // g

    @cached_property
    def graph(self) -> Graph:
        edges = [
            (i, j)
            for i, j in itertools.combinations(range(self.p), 2)
            if self.q <= min(j - i, self.p - (j - i)) <= self.p - self.q
        ]
        return make_graph(self.p, edges)


def circular_clique(p: int, q: int) -> Graph:
    """The circular clique K_{p/q} as a plain graph."""
    return CircularClique(p, q).graph


def find_homomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An edge-preserving (not necessarily injective) map g -> h, or None."""
    if g.order == 0:
        return {}
    if h.order == 0:
        return None
    order = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    hadj = h.adjacency
    image = [0] * g.order

    def place(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        cands = (1 << h.order) - 1
        for j in range(i):
            w = order[j]
            if g.has_edge(u, w):
                cands &= hadj[image[j]]
                if not cands:
                    return False
        c = cands
        while c:
            low = c & -c
            hv = low.bit_length() - 1
            c ^= low
            image[i] = hv
            if place(i + 1):
                return True
        return False

    if place(0):
        return {order[i]: image[i] for i in range(len(order))}
    return None


def _candidates(max_p: int, below: Optional[Fraction] = None) -> list[tuple[int, int]]:
    """Reduced (p, q) with 2 <= p/q (< below), p <= max_p, ascending by value."""
    pairs = []
    for q in range(1, max_p // 2 + 1):
        for p in range(2 * q, max_p + 1):
            if gcd(p, q) != 1:
                continue
            val = Fraction(p, q)
            if below is not None and val >= below:
                continue
            pairs.append((val, p, q))
    pairs.sort()
    return [(p, q) for _, p, q in pairs]


def circular_chromatic_number(g: Graph, max_p: Optional[int] = None) -> Fraction:
    """Exact circular chromatic number; 1 for graphs with no edge."""
    if not g.edges:
        return Fraction(1)
    cap = g.order if max_p is None else max_p
    for p, q in _candidates(cap):
        if find_homomorphism(g, circular_clique(p, q)) is not None:
            return Fraction(p, q)
    raise InternalInvariantViolationError("no homomorphism found within the search cap")


@dataclass(frozen=True)
class ChiWitness:
    """Decision plus the dual witnesses when the answer is yes.

    On the true side this carries both the circular-clique homomorphism
    and an injective circle realization whose induced model is a
    triangle-free supergraph of the input with a balanceable complement.
    """

    ok: bool
    p: Optional[int] = None
    q: Optional[int] = None
    homomorphism: Optional[dict[int, int]] = None
    points: Optional[dict[int, Fraction]] = None
    supergraph: Optional[Graph] = None

    def __bool__(self) -> bool:
        return self.ok


def _witness_points(
    g: Graph, p: int, q: int, hom: dict[int, int]
) -> dict[int, Fraction]:
    """Distinct angles near k/p preserving every strict edge separation."""
    n = g.order
    slack = Fraction(3 * q - p, 3 * p)
    delta = min(slack, Fraction(1, p)) / (2 * max(n, 1))
    return {v: (Fraction(hom[v], p) + v * delta) % 1 for v in range(n)}


def chi_c_less_than_3(g: Graph, max_p: Optional[int] = None) -> ChiWitness:
    """Whether the circular chromatic number is below 3, with dual witness.

    Edgeless graphs have value 1 by convention and get a synthesized
    witness (the attainment bound p <= |V| presumes an edge).
    """
    n = g.order
    if not g.edges:
        hom = {v: 0 for v in range(n)}
        points = _witness_points(g, 2, 1, hom) if n else {}
        super_g = induced_model(CircleKind.C3, [points[v] for v in range(n)])[0] if n else g
        return ChiWitness(True, 2, 1, hom, points, super_g)
    cap = g.order if max_p is None else max_p
    for p, q in _candidates(cap, below=Fraction(3)):
        hom = find_homomorphism(g, circular_clique(p, q))
        if hom is None:
            continue
        points = _witness_points(g, p, q, hom)
        model, pts = induced_model(CircleKind.C3, [points[v] for v in range(n)])
        if not g.edges <= model.edges:
            raise InternalInvariantViolationError("perturbation lost an edge")
        if find_balancing(complement(model), ANTI_EVEN) is None:
            raise InternalInvariantViolationError("witness complement is not balanceable")
        return ChiWitness(True, p, q, hom, points, model)
    return ChiWitness(False)

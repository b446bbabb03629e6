"""Finite simple graphs on dense integer vertices.

Vertices of an order-n graph are the indices 0..n-1; edges are unordered
pairs of distinct indices.  Graphs are immutable after construction and
every operation in this module is pure, so values can be shared freely
between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import LoopEdgeError, NotACycleError, VertexOutOfRangeError

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Graph",
    "InducedCycle",
    "make_graph",
    "complement",
    "disjoint_union",
    "induced_subgraph",
    "canonical_cycle",
    "validate_cycle",
    "enumerate_induced_cycles",
    "contains_induced",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "wheel_graph",
    "petersen_graph",
]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph."""

    order: int
    edges: frozenset[Edge]

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in sorted pair order; the canonical edge ordering."""
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """One neighbour bitmask per vertex."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adjacency[v]))


def make_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph; pairs are sorted and deduplicated."""
    if order < 0:
        raise VertexOutOfRangeError(f"negative order {order}")
    out: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{order - 1}")
        out.add(_norm_edge(u, v))
    return Graph(order, frozenset(out))


def complement(g: Graph) -> Graph:
    """Same vertices, edge exactly where g has a non-edge."""
    pairs = itertools.combinations(range(g.order), 2)
    return Graph(g.order, frozenset(e for e in pairs if e not in g.edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by a shifted copy of h."""
    shift = g.order
    shifted = ((u + shift, v + shift) for u, v in h.edges)
    return Graph(g.order + h.order, frozenset(g.edges) | frozenset(shifted))


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on `subset` keeping internal edges, plus the index map.

    Position i of the returned map is the original name of new vertex i.
    """
    keep = tuple(sorted(set(subset)))
    for v in keep:
        if not (0 <= v < g.order):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.order - 1}")
    pos = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    )
    return Graph(len(keep), edges), keep


@dataclass(frozen=True)
class InducedCycle:
    """A chordless cycle stored in canonical rotation.

    Canonical form: the smallest vertex comes first and its smaller
    cycle-neighbour second.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        k = len(vs)
        return [_norm_edge(vs[i], vs[(i + 1) % k]) for i in range(k)]


def canonical_cycle(seq: Iterable[int]) -> InducedCycle:
    """Rotate/reflect a cyclic vertex sequence into canonical form."""
    vs = list(seq)
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    if len(rot) >= 3 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return InducedCycle(tuple(rot))


def validate_cycle(g: Graph, cycle: InducedCycle) -> None:
    """Raise NotACycleError unless `cycle` is an induced cycle of g in canonical form."""
    vs = cycle.vertices
    k = len(vs)
    if k < 3:
        raise NotACycleError(f"length {k} < 3")
    if len(set(vs)) != k:
        raise NotACycleError("repeated vertex")
    for v in vs:
        if not (0 <= v < g.order):
            raise NotACycleError(f"vertex {v} outside host graph")
    for i, u in enumerate(vs):
        for j in range(i + 1, k):
            v = vs[j]
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if consecutive and not g.has_edge(u, v):
                raise NotACycleError(f"missing edge ({u}, {v})")
            if not consecutive and g.has_edge(u, v):
                raise NotACycleError(f"chord ({u}, {v})")
    if canonical_cycle(vs).vertices != vs:
        raise NotACycleError("not in canonical rotation")


def enumerate_induced_cycles(
    g: Graph, max_len: Optional[int] = None
) -> list[InducedCycle]:
    """All induced cycles of length <= max_len, canonical, each once, sorted.

    DFS over induced paths with chord pruning: a path may only be extended
    by a vertex that is adjacent to its tip and to no interior vertex.
    """
    n = g.order
    adj = g.adjacency
    cap = n if max_len is None else min(max_len, n)
    found: list[InducedCycle] = []
    if cap < 3:
        return found

    def extend(path: list[int], used: int, blocked: int) -> None:
        s = path[0]
        last = path[-1]
        cands = adj[last] & ~used & ~blocked & (-1 << (s + 1))
        for w in _bits(cands):
            if adj[w] & (1 << s):
                # closing chord to the start: record, never extend through it
                if len(path) + 1 <= cap and path[1] < w:
                    found.append(InducedCycle(tuple(path) + (w,)))
            elif len(path) + 2 <= cap:
                path.append(w)
                extend(path, used | (1 << w), blocked | adj[last])
                path.pop()

    for s in range(n):
        for v in _bits(adj[s] & (-1 << (s + 1))):
            extend([s, v], (1 << s) | (1 << v), 0)

    found.sort(key=lambda c: (len(c.vertices), c.vertices))
    return found


def contains_induced(g: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """An injective map embedding `pattern` into g as an induced subgraph.

    Returns {pattern vertex: g vertex} or None.  Backtracking with bitmask
    candidate filtering; pattern vertices are placed in degree-descending
    order.
    """
    k = pattern.order
    if k == 0:
        return {}
    if k > g.order:
        return None
    seq = sorted(range(k), key=lambda v: (-pattern.degree(v), v))
    padj = pattern.adjacency
    gadj = g.adjacency
    full = (1 << g.order) - 1
    image = [0] * k  # image[placed position] = g vertex

    def place(pos: int, used: int) -> bool:
        if pos == len(seq):
            return True
        u = seq[pos]
        cands = full & ~used
        for prev in range(pos):
            w = seq[prev]
            gw = image[prev]
            if padj[u] & (1 << w):
                cands &= gadj[gw]
            else:
                cands &= ~gadj[gw]
            if not cands:
                return False
        for gv in _bits(cands):
            image[pos] = gv
            if place(pos + 1, used | (1 << gv)):
                return True
        return False

    if place(0, 0):
        return {seq[i]: image[i] for i in range(k)}
    return None


# -- small catalogue used by tests, fixtures and the CLI ---------------------


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexOutOfRangeError("cycle needs at least 3 vertices")
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def wheel_graph(rim: int) -> Graph:
    """Cycle on `rim` vertices plus a universal hub (vertex `rim`)."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return make_graph(rim + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return make_graph(10, outer + inner + spokes)

"""Wheel and three-path-configuration detection, and local balance checking.

A wheel is an induced cycle plus an outside vertex adjacent to at least
three cycle vertices.  A three-path configuration joins three paths at
their endpoints in one of three patterns (theta, pyramid, prism); every
path has two distinct endpoints, and theta paths have at least one
interior vertex.

Detection is brute force over candidate vertex subsets with early pruning
and runs in O(n^k); this module exists for validation at desk scale, not
for asymptotic efficiency.  Everything here is pure; witness lists come
out in a fixed canonical order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InternalInvariantViolationError, UnsupportedRuleError
from .graphs import (
    Edge,
    Graph,
    InducedCycle,
    _norm_edge,
    enumerate_induced_cycles,
    induced_subgraph,
    validate_cycle,
)
from .signed import BalanceRule, find_balancing

__all__ = [
    "WheelWitness",
    "ThreePathWitness",
    "find_wheels",
    "find_3pcs",
    "truemper_balanceable",
]


@dataclass(frozen=True)
class WheelWitness:
    """An induced cycle plus a hub seeing at least three of its vertices."""

    cycle: InducedCycle
    hub: int
    spokes: frozenset[int]

    @property
    def span(self) -> frozenset[int]:
        return frozenset(self.cycle.vertices) | {self.hub}

    def validate(self, g: Graph) -> None:
        validate_cycle(g, self.cycle)
        if not (0 <= self.hub < g.order) or self.hub in self.cycle.vertices:
            raise InternalInvariantViolationError("hub must lie outside the cycle")
        actual = frozenset(
            v for v in self.cycle.vertices if g.has_edge(self.hub, v)
        )
        if actual != self.spokes or len(actual) < 3:
            raise InternalInvariantViolationError("spokes do not match the graph")


@dataclass(frozen=True)
class ThreePathWitness:
    """Three paths joined per one of the three patterns; `case` is 1, 2 or 3.

    Paths are stored oriented from x_i to y_i; `extra_edges` is the edge
    set E of the pattern (empty, one triangle, or two triangles).
    """

    case: int
    paths: tuple[tuple[int, ...], ...]
    extra_edges: frozenset[Edge]

    @property
    def span(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def validate(self, g: Graph) -> None:
        if self.case not in (1, 2, 3) or len(self.paths) != 3:
            raise InternalInvariantViolationError("malformed witness")
        for p in self.paths:
            if len(p) < 2 or len(set(p)) != len(p):
                raise InternalInvariantViolationError("paths need two distinct endpoints")
            for u, v in zip(p, p[1:]):
                if not g.has_edge(u, v):
                    raise InternalInvariantViolationError(f"missing path edge ({u}, {v})")
        for i, j in itertools.combinations(range(3), 2):
            pi, pj = self.paths[i], self.paths[j]
            allowed = {pi[0], pi[-1], pj[0], pj[-1]}
            if not (set(pi) & set(pj)) <= allowed:
                raise InternalInvariantViolationError("paths overlap off their endpoints")
        span = self.span
        hedges = {e for e in g.edges if e[0] in span and e[1] in span}
        truth = [_case_predicate(c, self.paths, hedges) for c in (1, 2, 3)]
        if sum(truth) != 1 or not truth[self.case - 1]:
            raise InternalInvariantViolationError("exactly one case condition must hold")
        if self.extra_edges != _case_extra_edges(self.paths, self.case):
            raise InternalInvariantViolationError("extra edge set does not match the case")


def _path_edges(paths: tuple[tuple[int, ...], ...]) -> set[Edge]:
    out: set[Edge] = set()
    for p in paths:
        for u, v in zip(p, p[1:]):
            out.add(_norm_edge(u, v))
    return out


def _triangle_edges(corners: list[int]) -> Optional[set[Edge]]:
    if len(set(corners)) != 3:
        return None
    a, b, c = corners
    return {_norm_edge(a, b), _norm_edge(a, c), _norm_edge(b, c)}


def _case_extra_edges(
    paths: tuple[tuple[int, ...], ...], case: int
) -> frozenset[Edge]:
    xs = [p[0] for p in paths]
    ys = [p[-1] for p in paths]
    if case == 1:
        return frozenset()
    if case == 2:
        tri = _triangle_edges(xs)
        return frozenset(tri) if tri else frozenset()
    tx, ty = _triangle_edges(xs), _triangle_edges(ys)
    return frozenset((tx or set()) | (ty or set()))


def _case_predicate(
    case: int, paths: tuple[tuple[int, ...], ...], hedges: set[Edge]
) -> bool:
    """The literal pattern condition for one case, against the induced edges."""
    xs = [p[0] for p in paths]
    ys = [p[-1] for p in paths]
    pe = _path_edges(paths)
    if case == 1:
        return (
            xs[0] == xs[1] == xs[2]
            and ys[0] == ys[1] == ys[2]
            and all(len(p) >= 3 for p in paths)
            and hedges == pe
        )
    if case == 2:
        if not (ys[0] == ys[1] == ys[2]):
            return False
        tri = _triangle_edges(xs)
        if tri is None:
            return False
        for i, j in itertools.combinations(range(3), 2):
            if set(paths[i]) & set(paths[j]) != {ys[0]}:
                return False
        return hedges == pe | tri
    for i, j in itertools.combinations(range(3), 2):
        if set(paths[i]) & set(paths[j]):
            return False
    tx, ty = _triangle_edges(xs), _triangle_edges(ys)
    if tx is None or ty is None:
        return False
    return hedges == pe | tx | ty


def find_wheels(g: Graph) -> list[WheelWitness]:
    """All (induced cycle, hub) wheel witnesses, in deterministic order."""
    out = []
    for cycle in enumerate_induced_cycles(g):
        mask = 0
        for v in cycle.vertices:
            mask |= 1 << v
        for hub in range(g.order):
            if mask & (1 << hub):
                continue
            spokes = frozenset(
                v for v in cycle.vertices if g.has_edge(hub, v)
            )
            if len(spokes) >= 3:
                w = WheelWitness(cycle, hub, spokes)
                w.validate(g)
                out.append(w)
    return out


# -- decomposition search on the induced span itself -------------------------


def _components_without(h: Graph, excluded: set[int]) -> list[set[int]]:
    seen = set(excluded)
    comps = []
    for s in range(h.order):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in h.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _order_component_path(
    h: Graph, comp: set[int], u: int, v: int
) -> Optional[tuple[int, ...]]:
    """Order `comp` as the interior of a u..v path, or None."""
    if len(comp) == 1:
        w = next(iter(comp))
        return (w,) if h.has_edge(w, u) and h.has_edge(w, v) else None
    inside = {w: [x for x in h.neighbors(w) if x in comp] for w in comp}
    ends = [w for w in comp if len(inside[w]) == 1]
    if len(ends) != 2 or any(len(inside[w]) > 2 for w in comp):
        return None
    eu = [w for w in ends if h.has_edge(w, u)]
    ev = [w for w in ends if h.has_edge(w, v)]
    if len(eu) != 1 or len(ev) != 1 or eu[0] == ev[0]:
        return None
    order = [eu[0]]
    prev = None
    cur = eu[0]
    while True:
        nxt = [w for w in inside[cur] if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    if cur != ev[0] or set(order) != comp:
        return None
    return tuple(order)


def _theta_decompositions(h: Graph) -> list[tuple[tuple[int, ...], ...]]:
    m = h.order
    if m < 5 or len(h.edges) != m + 1:
        return []
    deg3 = [v for v in range(m) if h.degree(v) == 3]
    if len(deg3) != 2:
        return []
    u, v = sorted(deg3)
    if h.has_edge(u, v):
        return []
    if any(h.degree(w) != 2 for w in range(m) if w not in (u, v)):
        return []
    comps = _components_without(h, {u, v})
    if len(comps) != 3:
        return []
    paths = []
    for comp in comps:
        interior = _order_component_path(h, comp, u, v)
        if interior is None:
            return []
        paths.append((u, *interior, v))
    return [tuple(sorted(paths))]


def _walk_path(
    h: Graph,
    start: int,
    forbidden: set[int],
    goals: set[int],
    interior: set[int],
    used: set[int],
) -> Optional[tuple[int, ...]]:
    """Walk from `start` through degree-2 interior vertices into `goals`."""
    nbrs = [w for w in h.neighbors(start) if w not in forbidden]
    if len(nbrs) != 1:
        return None
    path = [start]
    prev, cur = start, nbrs[0]
    for _ in range(h.order + 1):
        if cur in goals:
            path.append(cur)
            return tuple(path)
        if cur not in interior or cur in used:
            return None
        used.add(cur)
        path.append(cur)
        step = [w for w in h.neighbors(cur) if w != prev]
        if len(step) != 1:
            return None
        prev, cur = cur, step[0]
    return None


def _triangles(h: Graph) -> list[tuple[int, int, int]]:
    return [
        t
        for t in itertools.combinations(range(h.order), 3)
        if h.has_edge(t[0], t[1]) and h.has_edge(t[0], t[2]) and h.has_edge(t[1], t[2])
    ]


def _pyramid_decompositions(h: Graph) -> list[tuple[tuple[int, ...], ...]]:
    m = h.order
    if m < 4 or len(h.edges) != m + 2:
        return []
    out = []
    tris = _triangles(h)
    for apex in range(m):
        if h.degree(apex) != 3:
            continue
        for tri in tris:
            if apex in tri or any(h.degree(x) != 3 for x in tri):
                continue
            rest = set(range(m)) - set(tri) - {apex}
            if any(h.degree(w) != 2 for w in rest):
                continue
            used: set[int] = set()
            paths = []
            for x in tri:
                p = _walk_path(h, x, set(tri), {apex}, rest, used)
                if p is None:
                    break
                paths.append(p)
            else:
                if used == rest:
                    out.append(tuple(sorted(paths)))
    return out


def _prism_decompositions(h: Graph) -> list[tuple[tuple[int, ...], ...]]:
    m = h.order
    if m < 6 or len(h.edges) != m + 3:
        return []
    out = []
    tris = [t for t in _triangles(h) if all(h.degree(x) == 3 for x in t)]
    for ta, tb in itertools.combinations(tris, 2):
        if set(ta) & set(tb):
            continue
        rest = set(range(m)) - set(ta) - set(tb)
        if any(h.degree(w) != 2 for w in rest):
            continue
        for tx, ty in ((ta, tb), (tb, ta)):
            used: set[int] = set()
            paths = []
            for x in tx:
                p = _walk_path(h, x, set(tx), set(ty), rest, used)
                if p is None:
                    break
                paths.append(p)
            else:
                ends = [p[-1] for p in paths]
                if used == rest and sorted(ends) == sorted(ty):
                    out.append(tuple(sorted(paths)))
    return out


def _span_decompositions(
    h: Graph,
) -> list[tuple[int, tuple[tuple[int, ...], ...]]]:
    """Decompositions of the whole graph h, tagged with their case.

    The three patterns need exactly m+1, m+2 and m+3 edges respectively,
    so at most one case can apply to a given span.
    """
    extra = len(h.edges) - h.order
    if extra == 1:
        return [(1, d) for d in _theta_decompositions(h)]
    if extra == 2:
        return [(2, d) for d in _pyramid_decompositions(h)]
    if extra == 3:
        return [(3, d) for d in _prism_decompositions(h)]
    return []


def find_3pcs(g: Graph) -> list[ThreePathWitness]:
    """All three-path-configuration witnesses of g.

    Every vertex subset spanning a configuration is reported once per case
    with its lexicographically least path decomposition.
    """
    out = []
    for size in range(4, g.order + 1):
        for subset in itertools.combinations(range(g.order), size):
            h, vmap = induced_subgraph(g, subset)
            best: dict[int, tuple[tuple[int, ...], ...]] = {}
            for case, decomp in _span_decompositions(h):
                mapped = tuple(
                    sorted(tuple(vmap[x] for x in p) for p in decomp)
                )
                if case not in best or mapped < best[case]:
                    best[case] = mapped
            for case in sorted(best):
                paths = best[case]
                w = ThreePathWitness(case, paths, _case_extra_edges(paths, case))
                w.validate(g)
                out.append(w)
    return out


def _obstruction_spans(g: Graph) -> Iterator[frozenset[int]]:
    for cycle in enumerate_induced_cycles(g):
        mask = 0
        for v in cycle.vertices:
            mask |= 1 << v
        for hub in range(g.order):
            if mask & (1 << hub):
                continue
            if (g.adjacency[hub] & mask).bit_count() >= 3:
                yield frozenset(cycle.vertices) | {hub}
    for size in range(4, g.order + 1):
        for subset in itertools.combinations(range(g.order), size):
            h, _ = induced_subgraph(g, subset)
            if _span_decompositions(h):
                yield frozenset(subset)


def truemper_balanceable(g: Graph, rule: BalanceRule) -> bool:
    """True iff every wheel and three-path span of g is rule-balanceable.

    Only the named length-based rules restrict coherently to subgraphs, so
    explicit rules are rejected.
    """
    if not rule.is_named():
        raise UnsupportedRuleError("local check needs a length-based rule")
    seen: set[frozenset[int]] = set()
    for span in _obstruction_spans(g):
        if span in seen:
            continue
        seen.add(span)
        sub, _ = induced_subgraph(g, span)
        if find_balancing(sub, rule) is None:
            return False
    return True

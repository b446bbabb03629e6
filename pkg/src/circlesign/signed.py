"""Z2 edge labellings, switching, and balance solving over the cycle space.

A labelling assigns one bit to every edge; balance questions reduce to a
GF(2) linear system with one unknown per edge and one equation per induced
cycle, solved by bitset Gaussian elimination.  All values are immutable
and all operations pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .errors import (
    GraphMismatchError,
    InternalInvariantViolationError,
    NotATreeError,
    NotBalanceableError,
    RuleIncompleteError,
    VertexOutOfRangeError,
)
from .graphs import (
    Edge,
    Graph,
    InducedCycle,
    _norm_edge,
    enumerate_induced_cycles,
    validate_cycle,
)

__all__ = [
    "SignedGraph",
    "BalanceRule",
    "ANTI_EVEN",
    "EVEN_SIGNABLE",
    "ODD_SIGNABLE",
    "explicit_rule",
    "make_signed",
    "cycle_sum",
    "switch",
    "is_balancing",
    "find_balancing",
    "tree_extend",
    "switching_witness",
]


@dataclass(frozen=True)
class SignedGraph:
    """A graph plus a total edge labelling, stored in edge-list order."""

    graph: Graph
    labels: tuple[int, ...]

    def label(self, u: int, v: int) -> int:
        return self.labels[self.graph.edge_index[_norm_edge(u, v)]]

    def label_map(self) -> dict[Edge, int]:
        return dict(zip(self.graph.edge_list, self.labels))


def make_signed(
    graph: Graph, labels: Union[Mapping[Edge, int], Iterable[int]]
) -> SignedGraph:
    """Attach a labelling given as edge->bit map or bits in edge-list order."""
    if isinstance(labels, Mapping):
        norm = {_norm_edge(u, v): int(b) & 1 for (u, v), b in labels.items()}
        if set(norm) != set(graph.edges):
            raise ValueError("labelling must cover exactly the edge set")
        bits = tuple(norm[e] for e in graph.edge_list)
    else:
        bits = tuple(int(b) & 1 for b in labels)
        if len(bits) != len(graph.edge_list):
            raise ValueError("labelling must cover exactly the edge set")
    return SignedGraph(graph, bits)


_NAMED_KINDS = ("anti-even", "even-signable", "odd-signable")


@dataclass(frozen=True)
class BalanceRule:
    """Target cycle sums: a named length-based rule or an explicit table."""

    kind: str
    table: Optional[Mapping[InducedCycle, int]] = None

    def is_named(self) -> bool:
        return self.kind in _NAMED_KINDS

    def target(self, cycle: InducedCycle) -> int:
        if self.kind == "anti-even":
            return 0 if len(cycle) == 3 else 1
        if self.kind == "even-signable":
            return 1 if len(cycle) == 3 else 0
        if self.kind == "odd-signable":
            return 1
        assert self.table is not None
        try:
            return self.table[cycle] & 1
        except KeyError:
            raise RuleIncompleteError(
                f"explicit rule has no value for cycle {cycle.vertices}"
            ) from None


ANTI_EVEN = BalanceRule("anti-even")
EVEN_SIGNABLE = BalanceRule("even-signable")
ODD_SIGNABLE = BalanceRule("odd-signable")


def explicit_rule(table: Mapping[InducedCycle, int]) -> BalanceRule:
    return BalanceRule("explicit", dict(table))


def cycle_sum(sg: SignedGraph, cycle: InducedCycle) -> int:
    """Z2 sum of the labels along an induced cycle of sg's graph."""
    validate_cycle(sg.graph, cycle)
    total = 0
    for e in cycle.edges():
        total ^= sg.labels[sg.graph.edge_index[e]]
    return total


def switch(sg: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Flip the label of every edge with exactly one endpoint in s."""
    sset = set(s)
    for v in sset:
        if not (0 <= v < sg.graph.order):
            raise VertexOutOfRangeError(f"vertex {v} outside host graph")
    bits = list(sg.labels)
    for i, (u, v) in enumerate(sg.graph.edge_list):
        if (u in sset) != (v in sset):
            bits[i] ^= 1
    return SignedGraph(sg.graph, tuple(bits))


def is_balancing(sg: SignedGraph, rule: BalanceRule) -> bool:
    """True iff every induced cycle sums to the rule's value."""
    for c in enumerate_induced_cycles(sg.graph):
        if cycle_sum(sg, c) != rule.target(c):
            return False
    return True


def _gf2_solve(rows: list[tuple[int, int]], width: int) -> Optional[tuple[int, int]]:
    """Solve a GF(2) system given as (column mask, rhs bit) rows.

    Returns (solution mask, number of free columns) with every free column
    set to 0, or None when inconsistent.  Pivots take the lowest available
    column, so the outcome is deterministic.
    """
    reduced: list[tuple[int, int]] = []
    pivot_of: dict[int, int] = {}
    for mask, rhs in rows:
        cur, r = mask, rhs & 1
        while cur:
            col = (cur & -cur).bit_length() - 1
            hit = pivot_of.get(col)
            if hit is None:
                pivot_of[col] = len(reduced)
                reduced.append((cur, r))
                break
            pm, pr = reduced[hit]
            cur ^= pm
            r ^= pr
        else:
            if r:
                return None
    sol = 0
    for col in sorted(pivot_of, reverse=True):
        mask, rhs = reduced[pivot_of[col]]
        rest = mask & ~(1 << col)
        val = rhs ^ ((sol & rest).bit_count() & 1)
        if val:
            sol |= 1 << col
    return sol, width - len(pivot_of)


def _cycle_rows(g: Graph, rule: BalanceRule) -> list[tuple[int, int]]:
    rows = []
    for c in enumerate_induced_cycles(g):
        mask = 0
        for e in c.edges():
            mask |= 1 << g.edge_index[e]
        rows.append((mask, rule.target(c)))
    return rows


def find_balancing(g: Graph, rule: BalanceRule) -> Optional[SignedGraph]:
    """A labelling meeting the rule on every induced cycle, or None.

    Solves the GF(2) cycle system; free edges are set to 0 in elimination
    order so the result is reproducible.
    """
    solved = _gf2_solve(_cycle_rows(g, rule), len(g.edge_list))
    if solved is None:
        return None
    sol, _ = solved
    bits = tuple((sol >> i) & 1 for i in range(len(g.edge_list)))
    return SignedGraph(g, bits)


def _check_spanning_forest(g: Graph, tree_edges: set[Edge]) -> None:
    parent = list(range(g.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in tree_edges:
        if _norm_edge(u, v) not in g.edges:
            raise NotATreeError(f"({u}, {v}) is not an edge of the host graph")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotATreeError("tree edges contain a cycle")
        parent[ru] = rv
    components = len({find(v) for v in range(g.order)})
    g_components = _component_count(g)
    if len(tree_edges) != g.order - g_components or components != g_components:
        raise NotATreeError("tree edges are not maximal acyclic")


def _component_count(g: Graph) -> int:
    seen = [False] * g.order
    count = 0
    for s in range(g.order):
        if seen[s]:
            continue
        count += 1
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def tree_extend(
    g: Graph,
    tree_edges: Iterable[Edge],
    tree_labels: Mapping[Edge, int],
    rule: BalanceRule,
) -> SignedGraph:
    """The unique rule-balancing labelling agreeing with labels on a spanning forest."""
    tset = {_norm_edge(u, v) for u, v in tree_edges}
    _check_spanning_forest(g, tset)
    norm_labels = {_norm_edge(u, v): b & 1 for (u, v), b in tree_labels.items()}
    if set(norm_labels) != tset:
        raise NotATreeError("tree labels must cover exactly the tree edges")
    rows = _cycle_rows(g, rule)
    for e, b in sorted(norm_labels.items()):
        rows.append((1 << g.edge_index[e], b))
    solved = _gf2_solve(rows, len(g.edge_list))
    if solved is None:
        raise NotBalanceableError("no balancing labelling extends the tree labels")
    sol, free = solved
    if free:
        raise InternalInvariantViolationError(
            "pinned spanning forest left free edges; extension is not unique"
        )
    bits = tuple((sol >> i) & 1 for i in range(len(g.edge_list)))
    return SignedGraph(g, bits)


def switching_witness(a: SignedGraph, b: SignedGraph) -> Optional[frozenset[int]]:
    """Some S with switch(a, S) == b, or None.

    Membership is propagated along a spanning tree of each component from
    the label differences, then every non-tree edge is verified.  The root
    of each component is its smallest vertex and is kept outside S, which
    fixes one witness among the per-component complements.
    """
    if a.graph != b.graph:
        raise GraphMismatchError("signed graphs live on different graphs")
    g = a.graph
    diff = [la ^ lb for la, lb in zip(a.labels, b.labels)]

    def d(u: int, v: int) -> int:
        return diff[g.edge_index[_norm_edge(u, v)]]

    in_s: list[Optional[bool]] = [None] * g.order
    for root in range(g.order):
        if in_s[root] is not None:
            continue
        in_s[root] = False
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if in_s[w] is None:
                    in_s[w] = in_s[v] ^ bool(d(v, w))
                    stack.append(w)
    for u, v in g.edge_list:
        if (in_s[u] != in_s[v]) != bool(d(u, v)):
            return None
    return frozenset(v for v in range(g.order) if in_s[v])

"""Exact-rational model of the dense circular triangle-free graph.

Angles are fractions of a full turn kept in [0, 1); two points are
adjacent in the circle graph when they are strictly more than a third of
a turn apart, and adjacent in its complement when they are at most a
third apart.  Everything is computed with exact integer fractions; no
floating point is used anywhere, so the boundary at exactly 1/3 is
bit-exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import (
    DegenerateConfigurationError,
    DuplicatePointError,
    WitnessSearchExhaustedError,
)
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    contains_induced,
    make_graph,
)

__all__ = [
    "Angle",
    "THIRD",
    "PENTAGON",
    "CircleKind",
    "angle",
    "parse_angle",
    "format_angle",
    "circ_dist",
    "adjacent",
    "induced_model",
    "forbidden_subgraphs",
    "C3Embeddability",
    "embeds_in_c3",
    "find_c3_embedding",
    "epsilon_bound",
]

Angle = Fraction

THIRD = Fraction(1, 3)

#: The fixed anchor pentagon: five points inducing a 5-cycle in the
#: complement model, used by the universal labelling and by epsilon bounds.
PENTAGON: tuple[Fraction, ...] = tuple(Fraction(k, 5) for k in range(5))


class CircleKind(Enum):
    C3 = "c3"
    C3_COMPLEMENT = "c3-complement"


def angle(num: int, den: int = 1) -> Fraction:
    """The point at num/den of a full turn, normalized into [0, 1)."""
    return Fraction(num, den) % 1


def parse_angle(text: str) -> Fraction:
    parts = text.strip().split("/")
    if len(parts) == 1:
        return angle(int(parts[0]))
    if len(parts) == 2:
        return angle(int(parts[0]), int(parts[1]))
    raise ValueError(f"bad angle {text!r}")


def format_angle(a: Fraction) -> str:
    a = a % 1
    return f"{a.numerator}/{a.denominator}"


def circ_dist(a: Fraction, b: Fraction) -> Fraction:
    """Circular distance in turns, always in [0, 1/2]."""
    d = abs(a - b) % 1
    return min(d, 1 - d)


def adjacent(kind: CircleKind, a: Fraction, b: Fraction) -> bool:
    """Adjacency of two distinct points under the chosen model.

    The circle graph uses the strict inequality, so a pair at exactly a
    third of a turn is a complement edge.
    """
    if a % 1 == b % 1:
        return False
    d = circ_dist(a, b)
    if kind is CircleKind.C3:
        return d > THIRD
    return d <= THIRD


def induced_model(
    kind: CircleKind, points: Iterable[Fraction]
) -> tuple[Graph, tuple[Fraction, ...]]:
    """The finite model induced on `points`, plus the vertex->point map."""
    pts = tuple(Fraction(p) % 1 for p in points)
    if len(set(pts)) != len(pts):
        raise DuplicatePointError("model points must be pairwise distinct")
    n = len(pts)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if adjacent(kind, pts[i], pts[j])
    ]
    return make_graph(n, edges), pts


def forbidden_subgraphs() -> list[tuple[str, Graph]]:
    """The four graphs whose absence characterizes circle embeddability."""
    k1 = empty_graph(1)
    two_k2_k1 = disjoint_union(disjoint_union(path_2 := make_graph(2, [(0, 1)]), path_2), k1)
    return [
        ("K3", complete_graph(3)),
        ("2K2+K1", two_k2_k1),
        ("C5+K1", disjoint_union(cycle_graph(5), k1)),
        ("C6", cycle_graph(6)),
    ]


@dataclass(frozen=True)
class C3Embeddability:
    """Decision plus, on failure, which forbidden graph embeds and where."""

    ok: bool
    forbidden: Optional[str] = None
    witness: Optional[dict[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def embeds_in_c3(g: Graph) -> C3Embeddability:
    """Whether g is an induced subgraph of the circle graph."""
    for name, pattern in forbidden_subgraphs():
        hit = contains_induced(g, pattern)
        if hit is not None:
            return C3Embeddability(False, name, hit)
    return C3Embeddability(True)


def _grid_embed(
    g: Graph,
    den_cap: int,
    den_ok: Optional[Callable[[int], bool]] = None,
    point_ok: Optional[Callable[[Fraction], bool]] = None,
) -> Optional[dict[int, Fraction]]:
    """Backtracking search for an injective circle-graph realization of g.

    Tries grid points j/m for m = 1..den_cap; within one denominator,
    vertices are placed in degree-descending order and candidate angles
    ascend, so the first success is deterministic.
    """
    n = g.order
    if n == 0:
        return {}
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    for m in range(1, den_cap + 1):
        if den_ok is not None and not den_ok(m):
            continue
        grid = [Fraction(j, m) for j in range(m)]
        if point_ok is not None:
            grid = [p for p in grid if point_ok(p)]
        if len(grid) < n:
            continue
        placed: dict[int, Fraction] = {}

        def place(i: int) -> bool:
            if i == n:
                return True
            for p in grid:
                ok = True
                for j in range(i):
                    q = placed[j]
                    if p == q or (
                        g.has_edge(order[j], order[i]) != (circ_dist(p, q) > THIRD)
                    ):
                        ok = False
                        break
                if ok:
                    placed[i] = p
                    if place(i + 1):
                        return True
                    del placed[i]
            return False

        if place(0):
            return {order[i]: placed[i] for i in range(n)}
    return None


def find_c3_embedding(g: Graph, den_cap: Optional[int] = None) -> Optional[dict[int, Fraction]]:
    """An injective vertex->angle map realizing g inside the circle graph.

    Returns None exactly when g is not embeddable (decided first by the
    forbidden-subgraph check).  When g is embeddable but the grid search
    runs past den_cap, WitnessSearchExhaustedError is raised; that outcome
    is reportable and is never converted into a 'no'.
    """
    if not embeds_in_c3(g):
        return None
    cap = 60 * max(g.order, 1) if den_cap is None else den_cap
    found = _grid_embed(g, cap)
    if found is None:
        raise WitnessSearchExhaustedError(
            f"no grid witness with denominator <= {cap}"
        )
    return found


def epsilon_bound(
    points: Iterable[Fraction], include_anchors: bool = True
) -> Fraction:
    """Half the least slack any pair has against the adjacency threshold.

    The anchor pentagon is part of the pair pool by default.  A pair lying
    exactly on the threshold has no slack at all and is rejected.
    """
    pts = [Fraction(p) % 1 for p in points]
    if len(set(pts)) != len(pts):
        raise DuplicatePointError("points must be pairwise distinct")
    pool = sorted(set(pts) | (set(PENTAGON) if include_anchors else set()))
    best: Optional[Fraction] = None
    for a, b in itertools.combinations(pool, 2):
        slack = abs(THIRD - circ_dist(a, b))
        if slack == 0:
            raise DegenerateConfigurationError(
                f"pair ({format_angle(a)}, {format_angle(b)}) sits exactly on the threshold"
            )
        if best is None or slack < best:
            best = slack
    if best is None:
        # fewer than two relevant points; any small radius is safe
        return Fraction(1, 6)
    return best / 2

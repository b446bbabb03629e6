"""The universal edge labelling of the complement circle model.

The labelling is pinned down by three ingredients: a dense two-class
partition of the rational circle (class = parity of the reduced
numerator, with the five anchor points forced into class 0), the anchor
pentagon, and the rule that the tree edge from any point x to its first
anchor carries x's class.  Triangle sums being zero then propagates a
label to every edge, giving a closed-form pairwise oracle.

The anchors all sit in class 0 on purpose: the two ends of the anchor
edge p0p1 each nominate it as their tree edge, so its label is only
well defined when both ends share a class.  A finite override does not
hurt density.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .circle import (
    PENTAGON,
    THIRD,
    CircleKind,
    circ_dist,
    epsilon_bound,
    format_angle,
    induced_model,
    _grid_embed,
)
from .errors import (
    DuplicatePointError,
    HostMismatchError,
    InconsistentTriangleError,
    InternalInvariantViolationError,
    NotAdjacentError,
    NotBalanceableError,
    NotIndependenceTwoError,
    WitnessSearchExhaustedError,
)
from .graphs import Graph, complement
from .signed import ANTI_EVEN, SignedGraph, is_balancing, switching_witness

__all__ = [
    "CirclePoint",
    "parity_class",
    "p_anchor",
    "sigma_edge",
    "sigma_model",
    "perturb",
    "universal_embed",
    "extend_3",
]

_ANCHORS = frozenset(PENTAGON)

# labels of the pentagon's own five edges: the four tree edges carry 0,
# the remaining edge p3p4 is forced to 1 by the 5-cycle summing to 1
_PENT_EDGE_LABELS: dict[frozenset[int], int] = {
    frozenset((0, 1)): 0,
    frozenset((1, 2)): 0,
    frozenset((2, 3)): 0,
    frozenset((3, 4)): 1,
    frozenset((0, 4)): 0,
}


@dataclass(frozen=True)
class CirclePoint:
    """A circle point together with its (derived) parity class."""

    angle: Fraction

    @property
    def parity(self) -> int:
        return parity_class(self.angle)


def parity_class(a: Fraction) -> int:
    """0 for even reduced numerator, 1 for odd; anchors are always 0."""
    a = a % 1
    if a in _ANCHORS:
        return 0
    return a.numerator & 1


def p_anchor(x: Fraction) -> int:
    """Index of the first anchor adjacent to x in the complement model."""
    x = x % 1
    for i, p in enumerate(PENTAGON):
        if p != x and circ_dist(x, p) <= THIRD:
            return i
    raise InternalInvariantViolationError(
        f"{format_angle(x)} sees no anchor; a 2/3-turn arc holds at least 3"
    )


def _anchor_labels(x: Fraction) -> dict[int, int]:
    """Labels of all edges from a non-anchor point x to its anchor arc.

    The first anchor's edge carries the parity class of x; labels spread
    to the neighbouring anchors through zero-sum triangles using the
    pentagon's own edge labels.  The adjacent anchors form one contiguous
    arc, so the spread reaches all of them.
    """
    arc = {
        i
        for i, p in enumerate(PENTAGON)
        if p != x and circ_dist(x, p) <= THIRD
    }
    labels = {p_anchor(x): parity_class(x)}
    while len(labels) < len(arc):
        progressed = False
        for i in list(labels):
            for j in ((i + 1) % 5, (i - 1) % 5):
                if j in arc and j not in labels:
                    labels[j] = labels[i] ^ _PENT_EDGE_LABELS[frozenset((i, j))]
                    progressed = True
        if not progressed:
            raise InternalInvariantViolationError(
                f"anchor neighbourhood of {format_angle(x)} is not an arc"
            )
    return labels


def sigma_edge(x: Fraction, y: Fraction) -> int:
    """The universal label of the edge xy of the complement model.

    Pentagon-internal edges come from the fixed table; an edge into the
    pentagon reads the propagated anchor label; a generic edge adds the
    labels through any anchor both ends see (the choice cancels out).
    """
    x, y = x % 1, y % 1
    if x == y or circ_dist(x, y) > THIRD:
        raise NotAdjacentError(
            f"({format_angle(x)}, {format_angle(y)}) is not a complement edge"
        )
    x_anchor = x in _ANCHORS
    y_anchor = y in _ANCHORS
    if x_anchor and y_anchor:
        i, j = PENTAGON.index(x), PENTAGON.index(y)
        return _PENT_EDGE_LABELS[frozenset((i, j))]
    if x_anchor:
        return _anchor_labels(y)[PENTAGON.index(x)]
    if y_anchor:
        return _anchor_labels(x)[PENTAGON.index(y)]
    lx, ly = _anchor_labels(x), _anchor_labels(y)
    for i in sorted(set(lx) & set(ly)):
        return lx[i] ^ ly[i]
    raise InternalInvariantViolationError(
        "adjacent points always share an anchor neighbour"
    )


def sigma_model(points: Sequence[Fraction]) -> SignedGraph:
    """The induced complement model on `points`, every edge labelled."""
    graph, pts = induced_model(CircleKind.C3_COMPLEMENT, points)
    labels = tuple(
        sigma_edge(pts[u], pts[v]) for u, v in graph.edge_list
    )
    return SignedGraph(graph, labels)


def _scan_interval(
    lo: Fraction,
    hi: Fraction,
    ok,
    max_den: int = 100000,
) -> Optional[Fraction]:
    """First fraction in (lo, hi) passing `ok`, scanning denominators upward."""
    for m in range(1, max_den + 1):
        j_lo = (lo * m).__ceil__()
        if Fraction(j_lo, m) == lo:
            j_lo += 1
        j = j_lo
        while Fraction(j, m) < hi:
            z = Fraction(j, m) % 1
            if ok(z):
                return z
            j += 1
    return None


def perturb(
    points: Sequence[Fraction], moved: Iterable[Fraction]
) -> dict[Fraction, Fraction]:
    """Move each chosen point into the opposite parity class, nearby.

    Each moved point lands strictly within the epsilon bound of its old
    position, so all adjacencies (including those against the pentagon)
    survive; the parity flip makes the map act like a switch over the
    moved set.  Identity elsewhere.
    """
    pts = [Fraction(p) % 1 for p in points]
    moved_set = {Fraction(p) % 1 for p in moved}
    if not moved_set <= set(pts):
        raise DuplicatePointError("moved points must come from the point set")
    eps = epsilon_bound(pts)
    out: dict[Fraction, Fraction] = {p: p for p in pts if p not in moved_set}
    taken = set(out.values()) | _ANCHORS
    for p in pts:
        if p not in moved_set:
            continue
        want = 1 - parity_class(p)

        def admissible(z: Fraction) -> bool:
            return parity_class(z) == want and z not in taken

        z = _scan_interval(p - eps, p + eps, admissible)
        if z is None:
            raise InternalInvariantViolationError(
                "both parity classes are dense; the scan must succeed"
            )
        out[p] = z
        taken.add(z)
    return out


def _independence_at_most_two(g: Graph) -> bool:
    for a, b, c in itertools.combinations(range(g.order), 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return False
    return True


def universal_embed(sg: SignedGraph) -> dict[int, Fraction]:
    """A label-preserving injective realization of sg inside the model.

    Steps: realize the graph with a grid embedding, pull back the
    universal labels, find the switch set separating them from sg's
    labels, and move exactly those points to the opposite parity class.
    The grid is restricted to denominators coprime to 15 with the anchor
    points excluded, which keeps every pair strictly off the adjacency
    threshold so the final perturbation is always well defined.

    The output is re-verified; a mismatch raises instead of returning.
    """
    g = sg.graph
    if not _independence_at_most_two(g):
        raise NotIndependenceTwoError("three pairwise non-adjacent vertices")
    if not is_balancing(sg, ANTI_EVEN):
        raise NotBalanceableError("labelling has a cycle with the wrong sum")
    cap = 60 * max(g.order, 1)
    emb = _grid_embed(
        complement(g),
        cap,
        den_ok=lambda m: gcd(m, 15) == 1,
        point_ok=lambda p: p not in _ANCHORS,
    )
    if emb is None:
        raise WitnessSearchExhaustedError(
            f"no non-degenerate grid witness with denominator <= {cap}"
        )
    pts = [emb[v] for v in range(g.order)]
    pulled = sigma_model(pts)
    if pulled.graph != g:
        raise InternalInvariantViolationError("embedding does not induce the graph")
    wit = switching_witness(sg, pulled)
    if wit is None:
        raise InternalInvariantViolationError(
            "balancing labellings of one graph are always switch-related"
        )
    moved = {pts[v] for v in wit}
    mapping = perturb(pts, moved)
    final_pts = [mapping[p] for p in pts]
    final = sigma_model(final_pts)
    if final.graph != g or final.labels != sg.labels:
        raise InternalInvariantViolationError("re-verification failed")
    return {v: final_pts[v] for v in range(g.order)}


def extend_3(host: Sequence[Fraction], target: SignedGraph) -> Fraction:
    """Place one more point realizing a signed pattern on <= 3 vertices.

    `host` gives the already-placed points for target's first vertices;
    the returned angle realizes the remaining vertex's adjacencies and
    labels against them.  A triangle pattern must sum to 0.
    """
    g = target.graph
    k = len(host)
    if g.order > 3 or g.order != k + 1:
        raise HostMismatchError("target must extend the host by one vertex")
    pts = [Fraction(p) % 1 for p in host]
    if len(set(pts)) != k:
        raise DuplicatePointError("host points must be pairwise distinct")
    if g.order == 3 and len(g.edges) == 3 and (sum(target.labels) & 1):
        raise InconsistentTriangleError("triangle labels must sum to 0")
    for i, j in itertools.combinations(range(k), 2):
        edge_here = circ_dist(pts[i], pts[j]) <= THIRD
        if edge_here != g.has_edge(i, j):
            raise HostMismatchError("host adjacency differs from the pattern")
        if edge_here and sigma_edge(pts[i], pts[j]) != target.label(i, j):
            raise HostMismatchError("host labels differ from the pattern")
    new = k
    if k == 0:
        return Fraction(0)

    def ok(z: Fraction) -> bool:
        if z in pts:
            return False
        for i in range(k):
            if g.has_edge(i, new):
                if circ_dist(z, pts[i]) > THIRD:
                    return False
                if sigma_edge(z, pts[i]) != target.label(i, new):
                    return False
            elif circ_dist(z, pts[i]) <= THIRD:
                return False
        return True

    # intersect the closed/open adjacency arcs around the host points,
    # then scan each feasible arc by ascending denominator
    arcs: list[tuple[Fraction, Fraction]] = [(Fraction(0), Fraction(1))]
    for i in range(k):
        c = pts[i]
        if g.has_edge(i, new):
            lo, hi = c - THIRD, c + THIRD
        else:
            lo, hi = c + THIRD, c + 1 - THIRD
        pieces = []
        for alo, ahi in arcs:
            for shift in (-1, 0, 1):
                s_lo, s_hi = lo + shift, hi + shift
                nlo, nhi = max(alo, s_lo), min(ahi, s_hi)
                if nlo <= nhi:
                    pieces.append((nlo, nhi))
        arcs = pieces
        if not arcs:
            raise InternalInvariantViolationError("feasible arc set became empty")
    for m in range(1, 3001):
        for lo, hi in arcs:
            j = (lo * m).__ceil__()
            while Fraction(j, m) <= hi:
                z = Fraction(j, m) % 1
                if ok(z):
                    return z
                j += 1
    raise InternalInvariantViolationError(
        "the extension property guarantees a realizing point"
    )

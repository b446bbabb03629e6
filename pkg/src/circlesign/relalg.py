"""Finite symmetric relation algebras, networks, and the complete solver
for the four-atom algebra 56_65.

An algebra is given by its atom list, converse map and allowed triples;
elements are atom sets stored as bitmasks, so the Boolean reduct is the
powerset algebra.  Construction validates the axioms mechanically:
Peircean closure of the allowed triples, the identity law, converse
involution, and associativity of composition (checked on atom triples,
which by additivity settles all elements).

The solver decides satisfiability of 56_65 networks by backtracking over
atoms with path-consistency propagation, contracting variable pairs when
the identity atom is chosen, and produces rational-angle certificates
through the universal labelling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union

from .errors import (
    BadConverseError,
    BadIdentityError,
    IdOffDiagonalError,
    InternalInvariantViolationError,
    NotAssociativeError,
    NotAtomicError,
    NotPeirceanClosedError,
    UnsupportedAlgebraError,
    VertexOutOfRangeError,
    WitnessSearchExhaustedError,
)
from .circle import THIRD, circ_dist
from .graphs import make_graph
from .signed import ANTI_EVEN, SignedGraph, is_balancing
from .sigma import CirclePoint, sigma_edge, universal_embed

__all__ = [
    "RelationAlgebra",
    "Network",
    "Certificate",
    "make_algebra",
    "ra_56_65",
    "compose_elements",
    "make_network",
    "path_consistency",
    "network_to_signed",
    "nsp_solve",
    "verify_certificate",
]

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class RelationAlgebra:
    """A finite symmetric-or-not relation algebra given by its atom table."""

    atoms: tuple[str, ...]
    id_index: int
    converse: tuple[int, ...]
    allowed: frozenset[Triple]

    @cached_property
    def top(self) -> int:
        return (1 << len(self.atoms)) - 1

    @cached_property
    def comp(self) -> tuple[tuple[int, ...], ...]:
        """comp[a][b] = bitmask of atoms z with (a, b, z) allowed."""
        k = len(self.atoms)
        table = [[0] * k for _ in range(k)]
        for x, y, z in self.allowed:
            table[x][y] |= 1 << z
        return tuple(tuple(row) for row in table)

    def atom_bit(self, name: str) -> int:
        return 1 << self.atoms.index(name)

    def converse_mask(self, mask: int) -> int:
        out = 0
        for a in _bits(mask):
            out |= 1 << self.converse[a]
        return out

    def element_names(self, mask: int) -> list[str]:
        return [self.atoms[a] for a in _bits(mask)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def compose_elements(ra: RelationAlgebra, a: int, b: int) -> int:
    """Composition of two elements (atom-set bitmasks), extended additively."""
    out = 0
    for x in _bits(a):
        row = ra.comp[x]
        for y in _bits(b):
            out |= row[y]
    return out


def make_algebra(
    atoms: Iterable[str],
    id_atom: str,
    allowed: Iterable[tuple[str, str, str]],
    converse: Optional[Mapping[str, str]] = None,
) -> RelationAlgebra:
    """Build and validate an algebra from its atom-level data.

    Rejects tables violating Peircean closure, the identity law, converse
    involution, or associativity.
    """
    names = tuple(atoms)
    if len(set(names)) != len(names) or not names:
        raise BadIdentityError("atom names must be distinct and non-empty")
    index = {a: i for i, a in enumerate(names)}
    if id_atom not in index:
        raise BadIdentityError(f"identity atom {id_atom!r} is not an atom")
    id_index = index[id_atom]
    if converse is None:
        conv = tuple(range(len(names)))
    else:
        try:
            conv = tuple(index[converse[a]] for a in names)
        except KeyError as exc:
            raise BadConverseError(f"converse maps outside the atoms: {exc}") from None
    for a, ca in enumerate(conv):
        if conv[ca] != a:
            raise BadConverseError("converse must be an involution")
    if conv[id_index] != id_index:
        raise BadConverseError("converse must fix the identity atom")
    triples = frozenset(
        (index[x], index[y], index[z]) for x, y, z in allowed
    )
    for x, y, z in triples:
        for t in (
            (conv[x], z, y),
            (z, conv[y], x),
            (conv[z], x, conv[y]),
            (y, conv[z], conv[x]),
            (conv[y], conv[x], conv[z]),
        ):
            if t not in triples:
                raise NotPeirceanClosedError(
                    f"missing Peircean transform {t} of ({x}, {y}, {z})"
                )
    ra = RelationAlgebra(names, id_index, conv, triples)
    for a in range(len(names)):
        if ra.comp[a][id_index] != 1 << a:
            raise BadIdentityError(
                f"{names[a]} o id = {ra.element_names(ra.comp[a][id_index])}"
            )
        if ra.comp[id_index][a] != 1 << a:
            raise BadIdentityError(
                f"id o {names[a]} = {ra.element_names(ra.comp[id_index][a])}"
            )
    for a, b, c in itertools.product(range(len(names)), repeat=3):
        left = compose_elements(ra, ra.comp[a][b], 1 << c)
        right = compose_elements(ra, 1 << a, ra.comp[b][c])
        if left != right:
            raise NotAssociativeError(
                f"({names[a]} o {names[b]}) o {names[c]} != "
                f"{names[a]} o ({names[b]} o {names[c]})"
            )
    return ra


_ATOMS_56_65 = ("id", "N", "0", "1")
_ra_56_65_cache: Optional[RelationAlgebra] = None


def ra_56_65() -> RelationAlgebra:
    """The symmetric four-atom algebra on {id, N, 0, 1}.

    Forbidden are (N,N,N), (1,1,1) and every permutation of (0,0,1),
    plus the identity patterns relating two distinct atoms.
    """
    global _ra_56_65_cache
    if _ra_56_65_cache is not None:
        return _ra_56_65_cache
    base = [("N", "N", "N"), ("1", "1", "1"), ("0", "0", "1"), ("0", "1", "0"), ("1", "0", "0")]
    forbidden: set[tuple[str, str, str]] = set()
    for t in base:
        forbidden.update(itertools.permutations(t))
    for x, y in itertools.product(_ATOMS_56_65, repeat=2):
        if x != y:
            forbidden.update({("id", x, y), (x, "id", y), (x, y, "id")})
    allowed = [
        t
        for t in itertools.product(_ATOMS_56_65, repeat=3)
        if t not in forbidden
    ]
    _ra_56_65_cache = make_algebra(_ATOMS_56_65, "id", allowed)
    return _ra_56_65_cache


def _is_56_65(ra: RelationAlgebra) -> bool:
    return ra == ra_56_65()


def _require_56_65(ra: RelationAlgebra) -> None:
    if not _is_56_65(ra):
        raise UnsupportedAlgebraError(
            "complete solving and certificates only cover 56_65"
        )


@dataclass(frozen=True)
class Network:
    """Variables 0..size-1 with an atom-set constraint on every pair.

    Off-diagonal masks are stored once per unordered pair; the reverse
    orientation is the converse image.  Diagonal masks are kept alongside
    (satisfiability needs the identity atom in every one).
    """

    algebra: RelationAlgebra
    size: int
    pair_masks: tuple[int, ...]
    diag_masks: tuple[int, ...]

    def _pair_index(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        return x * self.size - x * (x + 1) // 2 + (y - x - 1)

    def mask(self, x: int, y: int) -> int:
        if x == y:
            return self.diag_masks[x]
        m = self.pair_masks[self._pair_index(x, y)]
        return m if x < y else self.algebra.converse_mask(m)

    def with_pair(self, x: int, y: int, mask: int) -> "Network":
        if x == y:
            diag = list(self.diag_masks)
            diag[x] = mask
            return replace(self, diag_masks=tuple(diag))
        if x > y:
            x, y = y, x
            mask = self.algebra.converse_mask(mask)
        pairs = list(self.pair_masks)
        pairs[self._pair_index(x, y)] = mask
        return replace(self, pair_masks=tuple(pairs))


def _as_mask(ra: RelationAlgebra, val: Union[int, Iterable[str]]) -> int:
    if isinstance(val, int):
        if not 0 <= val <= ra.top:
            raise ValueError(f"mask {val} out of range")
        return val
    out = 0
    for name in val:
        out |= ra.atom_bit(name)
    return out


def make_network(
    ra: RelationAlgebra,
    size: int,
    constraints: Optional[Mapping[tuple[int, int], Union[int, Iterable[str]]]] = None,
) -> Network:
    """A network with the given constraints; omitted pairs default to top.

    Entries may be stated in either orientation (or both); everything is
    folded into canonical form through the converse.
    """
    if size < 0:
        raise VertexOutOfRangeError("network size must be non-negative")
    pair_count = size * (size - 1) // 2
    pairs = [ra.top] * pair_count
    diag = [ra.top] * size
    net = Network(ra, size, tuple(pairs), tuple(diag))
    if constraints:
        pairs = list(net.pair_masks)
        diag = list(net.diag_masks)
        for (x, y), val in constraints.items():
            if not (0 <= x < size and 0 <= y < size):
                raise VertexOutOfRangeError(f"bad variable pair ({x}, {y})")
            m = _as_mask(ra, val)
            if x == y:
                diag[x] &= m
            else:
                if x > y:
                    x, y, m = y, x, ra.converse_mask(m)
                idx = net._pair_index(x, y)
                pairs[idx] &= m
        net = Network(ra, size, tuple(pairs), tuple(diag))
    return net


def path_consistency(net: Network) -> Optional[Network]:
    """Greatest path-consistent refinement, or None when a mask empties.

    Iterates f(x,y) <- f(x,y) & (f(x,z) o f(z,y)) to a fixpoint, after
    first cutting every diagonal down to the identity.
    """
    ra = net.algebra
    n = net.size
    id_bit = 1 << ra.id_index
    work = net
    diag = list(work.diag_masks)
    for x in range(n):
        diag[x] &= id_bit
        if diag[x] == 0:
            return None
    work = replace(work, diag_masks=tuple(diag))
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for y in range(x, n):
                m = work.mask(x, y)
                for z in range(n):
                    if z == x or z == y:
                        continue
                    m &= compose_elements(ra, work.mask(x, z), work.mask(z, y))
                    if m == 0:
                        return None
                if m != work.mask(x, y):
                    work = work.with_pair(x, y, m)
                    changed = True
    return work


def network_to_signed(net: Network) -> SignedGraph:
    """The signed graph of an atomic network with identity only on the diagonal."""
    ra = net.algebra
    _require_56_65(ra)
    id_bit = 1 << ra.id_index
    bit_n = ra.atom_bit("N")
    bit_0 = ra.atom_bit("0")
    bit_1 = ra.atom_bit("1")
    for x in range(net.size):
        if net.mask(x, x) != id_bit:
            raise IdOffDiagonalError(f"diagonal of {x} is not the identity atom")
    edges = {}
    for x, y in itertools.combinations(range(net.size), 2):
        m = net.mask(x, y)
        if m.bit_count() != 1:
            raise NotAtomicError(f"constraint on ({x}, {y}) is not a single atom")
        if m == id_bit:
            raise IdOffDiagonalError(f"identity atom off the diagonal at ({x}, {y})")
        if m == bit_0:
            edges[(x, y)] = 0
        elif m == bit_1:
            edges[(x, y)] = 1
        elif m != bit_n:
            raise NotAtomicError(f"unknown atom mask {m} on ({x}, {y})")
    graph = make_graph(net.size, edges.keys())
    labels = tuple(edges[e] for e in graph.edge_list)
    return SignedGraph(graph, labels)


@dataclass(frozen=True)
class Certificate:
    """A satisfying assignment of circle points, plus the merge partition."""

    points: tuple[CirclePoint, ...]
    merged: tuple[tuple[int, ...], ...]


def _contract(
    net: Network, blocks: tuple[frozenset[int], ...], x: int, y: int
) -> tuple[Optional[Network], tuple[frozenset[int], ...]]:
    """Merge variable y into x (x < y), intersecting their constraints."""
    ra = net.algebra
    n = net.size
    keep = [v for v in range(n) if v != y]
    remap = {v: i for i, v in enumerate(keep)}
    new_constraints: dict[tuple[int, int], int] = {}
    for v in keep:
        if v == x:
            continue
        m = net.mask(x, v) & net.mask(y, v)
        if m == 0:
            return None, blocks
        new_constraints[(remap[x], remap[v])] = m
    for a, b in itertools.combinations(keep, 2):
        if x in (a, b):
            continue
        new_constraints[(remap[a], remap[b])] = net.mask(a, b)
    out = make_network(ra, n - 1)
    pairs = list(out.pair_masks)
    for (a, b), m in new_constraints.items():
        if a > b:
            a, b, m = b, a, ra.converse_mask(m)
        pairs[out._pair_index(a, b)] = m
    diag = [0] * (n - 1)
    for v in keep:
        m = net.mask(v, v)
        if v == x:
            m &= net.mask(y, y)
        diag[remap[v]] = m
    new_blocks = tuple(
        blocks[v] | blocks[y] if v == x else blocks[v] for v in keep
    )
    return replace(out, pair_masks=tuple(pairs), diag_masks=tuple(diag)), new_blocks


def _decided_parity_ok(net: Network) -> bool:
    """Anti-even parity of every fully decided 4- and 5-cycle pattern."""
    ra = net.algebra
    id_bit = 1 << ra.id_index
    bit_n = ra.atom_bit("N")
    bit_1 = ra.atom_bit("1")
    n = net.size

    def decided(x: int, y: int) -> Optional[int]:
        m = net.mask(x, y)
        return m if m.bit_count() == 1 and m != id_bit else None

    for size in (4, 5):
        for sub in itertools.combinations(range(n), size):
            masks = {}
            all_decided = True
            for x, y in itertools.combinations(sub, 2):
                m = decided(x, y)
                if m is None:
                    all_decided = False
                    break
                masks[(x, y)] = m
            if not all_decided:
                continue
            degree = {v: 0 for v in sub}
            edge_labels = []
            for (x, y), m in masks.items():
                if m != bit_n:
                    degree[x] += 1
                    degree[y] += 1
                    edge_labels.append(1 if m == bit_1 else 0)
            if len(edge_labels) == size and all(d == 2 for d in degree.values()):
                if sum(edge_labels) & 1 != 1:
                    return False
    return True


def _solve(
    net: Network, blocks: tuple[frozenset[int], ...], total: int
) -> Optional[Certificate]:
    refined = path_consistency(net)
    if refined is None:
        return None
    net = refined
    id_bit = 1 << net.algebra.id_index
    for x, y in itertools.combinations(range(net.size), 2):
        if net.mask(x, y) == id_bit:
            cnet, cblocks = _contract(net, blocks, x, y)
            if cnet is None:
                return None
            return _solve(cnet, cblocks, total)
    if not _decided_parity_ok(net):
        return None
    branch = None
    for x, y in itertools.combinations(range(net.size), 2):
        count = net.mask(x, y).bit_count()
        if count >= 2 and (branch is None or count < branch[0]):
            branch = (count, x, y)
    if branch is None:
        sg = network_to_signed(net)
        if not is_balancing(sg, ANTI_EVEN):
            return None
        try:
            emb = universal_embed(sg)
        except WitnessSearchExhaustedError as exc:
            raise InternalInvariantViolationError(
                "a satisfiable atomic network must embed"
            ) from exc
        points: list[Optional[CirclePoint]] = [None] * total
        for var in range(net.size):
            pt = CirclePoint(emb[var])
            for orig in blocks[var]:
                points[orig] = pt
        merged = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return Certificate(tuple(points), merged)  # type: ignore[arg-type]
    _, x, y = branch
    mask = net.mask(x, y)
    for atom in _bits(mask):
        res = _solve(net.with_pair(x, y, 1 << atom), blocks, total)
        if res is not None:
            return res
    return None


def nsp_solve(net: Network) -> Optional[Certificate]:
    """Complete satisfiability decision for 56_65 networks.

    Returns a verified certificate for satisfiable networks and None for
    unsatisfiable ones.  The certificate assigns every original variable
    a circle point; variables merged through the identity atom share one.
    """
    _require_56_65(net.algebra)
    if net.size == 0:
        return Certificate((), ())
    blocks = tuple(frozenset([v]) for v in range(net.size))
    return _solve(net, blocks, net.size)


def verify_certificate(net: Network, cert: Certificate) -> bool:
    """Check a certificate against the network, pair by pair.

    The realized atom of a pair is read off the points alone: identity
    for equal points, N for a non-adjacent pair, else the universal label
    of the edge.  Uses only the labelling oracle, never solver state.
    """
    ra = net.algebra
    _require_56_65(ra)
    if len(cert.points) != net.size:
        return False
    seen = set()
    for block in cert.merged:
        for v in block:
            if v in seen or not (0 <= v < net.size):
                return False
            seen.add(v)
    if len(seen) != net.size:
        return False
    angle_of = [p.angle % 1 for p in cert.points]
    for block in cert.merged:
        first = angle_of[block[0]]
        if any(angle_of[v] != first for v in block):
            return False
    rep_angles = [angle_of[block[0]] for block in cert.merged]
    if len(set(rep_angles)) != len(rep_angles):
        return False
    id_bit = 1 << ra.id_index
    bit_n = ra.atom_bit("N")
    bit_0 = ra.atom_bit("0")
    bit_1 = ra.atom_bit("1")
    for x in range(net.size):
        if not net.mask(x, x) & id_bit:
            return False
    for x, y in itertools.combinations(range(net.size), 2):
        a, b = angle_of[x], angle_of[y]
        if a == b:
            realized = id_bit
        elif circ_dist(a, b) > THIRD:
            realized = bit_n
        else:
            realized = bit_1 if sigma_edge(a, b) else bit_0
        if not net.mask(x, y) & realized:
            return False
    return True

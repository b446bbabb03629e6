"""JSON document formats for graphs, signed graphs, networks and certificates.

Rationals are serialized as "num/den" strings so that nothing ever passes
through floating point.  `emit` is canonical: parsing its output and
emitting again reproduces the bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

from .circle import format_angle, parse_angle
from .errors import CircleSignError, ParseError, ValidationError
from .graphs import Graph, make_graph
from .relalg import Certificate, Network, make_network, ra_56_65
from .sigma import CirclePoint
from .signed import SignedGraph, make_signed

__all__ = ["Document", "parse", "emit"]

Payload = Union[Graph, SignedGraph, Network, Certificate]

KINDS = ("graph", "signed-graph", "network", "certificate")


@dataclass(frozen=True)
class Document:
    kind: str
    value: Payload


def _require(obj: dict, field: str) -> Any:
    if field not in obj:
        raise ParseError(f"missing field {field!r}")
    return obj[field]


def _parse_graph(obj: dict) -> Graph:
    n = _require(obj, "n")
    edges = _require(obj, "edges")
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError("graph needs integer 'n' and list 'edges'")
    try:
        return make_graph(n, [tuple(e) for e in edges])
    except (CircleSignError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad graph: {exc}") from exc


def _parse_signed(obj: dict) -> SignedGraph:
    n = _require(obj, "n")
    triples = _require(obj, "edges")
    try:
        edges = [(int(u), int(v)) for u, v, _ in triples]
        labels = {(int(u), int(v)): int(b) for u, v, b in triples}
        if any(b not in (0, 1) for b in labels.values()):
            raise ValueError("labels must be 0 or 1")
        graph = make_graph(n, edges)
        return make_signed(graph, labels)
    except (CircleSignError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad signed graph: {exc}") from exc


def _parse_network(obj: dict) -> Network:
    n = _require(obj, "vars")
    items = obj.get("constraints", [])
    ra = ra_56_65()
    valid = set(ra.atoms)
    cons: dict[tuple[int, int], int] = {}
    try:
        for item in items:
            x, y = int(item["x"]), int(item["y"])
            atoms = item["atoms"]
            for a in atoms:
                if a not in valid:
                    raise ValidationError(f"unknown atom {a!r}")
            mask = 0
            for a in atoms:
                mask |= ra.atom_bit(a)
            key = (x, y)
            cons[key] = cons.get(key, ra.top) & mask
        return make_network(ra, n, cons)
    except ValidationError:
        raise
    except (CircleSignError, TypeError, KeyError, ValueError) as exc:
        raise ValidationError(f"bad network: {exc}") from exc


def _parse_certificate(obj: dict) -> Certificate:
    try:
        pts = [
            CirclePoint(parse_angle(item["angle"]))
            for item in _require(obj, "assignment")
        ]
        for item, pt in zip(obj["assignment"], pts):
            if int(item.get("parity", pt.parity)) != pt.parity:
                raise ValidationError("stored parity disagrees with the angle")
        merged = tuple(
            tuple(sorted(int(v) for v in block)) for block in _require(obj, "merged")
        )
        return Certificate(tuple(pts), tuple(sorted(merged)))
    except ValidationError:
        raise
    except (CircleSignError, TypeError, KeyError, ValueError) as exc:
        raise ValidationError(f"bad certificate: {exc}") from exc


def parse(text: str) -> Document:
    """Parse and validate a document; payloads go through the module constructors."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    kind = _require(obj, "kind")
    if kind == "graph":
        return Document(kind, _parse_graph(obj))
    if kind == "signed-graph":
        return Document(kind, _parse_signed(obj))
    if kind == "network":
        return Document(kind, _parse_network(obj))
    if kind == "certificate":
        return Document(kind, _parse_certificate(obj))
    raise ParseError(f"unknown document kind {kind!r}; expected one of {KINDS}")


def _jsonable(doc: Document) -> dict:
    v = doc.value
    if doc.kind == "graph":
        assert isinstance(v, Graph)
        return {"kind": "graph", "n": v.order, "edges": [list(e) for e in v.edge_list]}
    if doc.kind == "signed-graph":
        assert isinstance(v, SignedGraph)
        return {
            "kind": "signed-graph",
            "n": v.graph.order,
            "edges": [
                [u, w, v.labels[i]] for i, (u, w) in enumerate(v.graph.edge_list)
            ],
        }
    if doc.kind == "network":
        assert isinstance(v, Network)
        ra = v.algebra
        cons = []
        for x in range(v.size):
            for y in range(x, v.size):
                m = v.mask(x, y)
                if m != ra.top:
                    cons.append({"x": x, "y": y, "atoms": ra.element_names(m)})
        return {"kind": "network", "vars": v.size, "constraints": cons}
    assert isinstance(v, Certificate)
    return {
        "kind": "certificate",
        "assignment": [
            {"angle": format_angle(p.angle), "parity": p.parity} for p in v.points
        ],
        "merged": [list(b) for b in v.merged],
    }


def emit(doc: Document) -> str:
    """Canonical single-line JSON for a document."""
    return json.dumps(_jsonable(doc), sort_keys=True, separators=(", ", ": "))

"""Command-line surface tying the library together.

Exit codes follow one convention everywhere: 0 for a positive answer,
1 for a negative answer, 2 for errors (including unknown commands and
exhausted witness searches, which are reportable outcomes rather than
negative answers).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import documents
from .chromatic import chi_c_less_than_3, circular_chromatic_number
from .circle import find_c3_embedding, format_angle, parse_angle, embeds_in_c3
from .errors import (
    CircleSignError,
    NotBalanceableError,
    NotIndependenceTwoError,
    WitnessSearchExhaustedError,
)
from .generators import (
    random_angles,
    random_balanced_signed,
    random_graph,
    random_network,
)
from .graphs import Graph
from .relalg import Certificate, Network, nsp_solve, path_consistency, verify_certificate
from .sigma import extend_3, sigma_model, universal_embed
from .signed import (
    ANTI_EVEN,
    EVEN_SIGNABLE,
    ODD_SIGNABLE,
    SignedGraph,
    find_balancing,
    is_balancing,
)
from .truemper import find_3pcs, find_wheels, truemper_balanceable

_RULES = {
    "anti-even": ANTI_EVEN,
    "even-signable": EVEN_SIGNABLE,
    "odd-signable": ODD_SIGNABLE,
}


class _CliFailure(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _load(path: str, kind: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = documents.parse(fh.read())
    except OSError as exc:
        raise _CliFailure(f"cannot read {path}: {exc}") from exc
    except CircleSignError as exc:
        raise _CliFailure(f"{path}: {exc}") from exc
    if doc.kind != kind:
        raise _CliFailure(f"{path}: expected a {kind} document, got {doc.kind}")
    return doc.value


def _emit(kind: str, value) -> None:
    print(documents.emit(documents.Document(kind, value)))


def _cmd_balance(args) -> int:
    rule = _RULES[args.rule]
    if args.action == "find":
        g: Graph = _load(args.file, "graph")
        sg = find_balancing(g, rule)
        if sg is None:
            print("NONE")
            return 1
        _emit("signed-graph", sg)
        return 0
    sg = _load(args.file, "signed-graph")
    ok = is_balancing(sg, rule)
    print("BALANCING" if ok else "NOT-BALANCING")
    return 0 if ok else 1


def _cmd_truemper(args) -> int:
    g: Graph = _load(args.file, "graph")
    if args.action == "check":
        ok = truemper_balanceable(g, _RULES[args.rule])
        print("BALANCEABLE" if ok else "NOT-BALANCEABLE")
        return 0 if ok else 1
    wheels = find_wheels(g)
    configs = find_3pcs(g)
    out = {
        "wheels": [
            {"cycle": list(w.cycle.vertices), "hub": w.hub, "spokes": sorted(w.spokes)}
            for w in wheels
        ],
        "three_path_configurations": [
            {"case": w.case, "paths": [list(p) for p in w.paths]} for w in configs
        ],
    }
    print(json.dumps(out, sort_keys=True))
    return 0 if (wheels or configs) else 1


def _cmd_c3(args) -> int:
    g: Graph = _load(args.file, "graph")
    if args.action == "test":
        res = embeds_in_c3(g)
        if res.ok:
            print("EMBEDDABLE")
            return 0
        print(f"NOT-EMBEDDABLE {res.forbidden} {json.dumps(res.witness, sort_keys=True)}")
        return 1
    emb = find_c3_embedding(g, args.den_cap)
    if emb is None:
        print("NOT-EMBEDDABLE")
        return 1
    print(json.dumps({str(v): format_angle(a) for v, a in emb.items()}, sort_keys=True))
    return 0


def _cmd_sigma(args) -> int:
    if args.action == "label":
        pts = [parse_angle(t) for t in args.angles]
        _emit("signed-graph", sigma_model(pts))
        return 0
    if args.action == "embed":
        sg: SignedGraph = _load(args.file, "signed-graph")
        try:
            emb = universal_embed(sg)
        except (NotBalanceableError, NotIndependenceTwoError) as exc:
            print(f"NOT-EMBEDDABLE: {exc}")
            return 1
        print(
            json.dumps({str(v): format_angle(a) for v, a in emb.items()}, sort_keys=True)
        )
        return 0
    target: SignedGraph = _load(args.file, "signed-graph")
    host = [parse_angle(t) for t in args.angles]
    z = extend_3(host, target)
    print(format_angle(z))
    return 0


def _cmd_nsp(args) -> int:
    net: Network = _load(args.file, "network")
    if args.action == "solve":
        cert = nsp_solve(net)
        if cert is None:
            print("UNSAT")
            return 1
        print("SAT")
        _emit("certificate", cert)
        return 0
    if args.action == "pc":
        refined = path_consistency(net)
        if refined is None:
            print("INCONSISTENT")
            return 1
        _emit("network", refined)
        return 0
    cert: Certificate = _load(args.cert, "certificate")
    ok = verify_certificate(net, cert)
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def _cmd_chic(args) -> int:
    g: Graph = _load(args.file, "graph")
    if args.action == "value":
        value = circular_chromatic_number(g)
        print(f"{value.numerator}/{value.denominator}")
        return 0
    wit = chi_c_less_than_3(g)
    if not wit:
        print("NO")
        return 1
    assert wit.points is not None and wit.supergraph is not None
    print(
        json.dumps(
            {
                "target": f"{wit.p}/{wit.q}",
                "homomorphism": {str(v): i for v, i in (wit.homomorphism or {}).items()},
                "points": {str(v): format_angle(a) for v, a in wit.points.items()},
                "supergraph_edges": [list(e) for e in wit.supergraph.edge_list],
            },
            sort_keys=True,
        )
    )
    return 0


def _cmd_gen(args) -> int:
    if args.what == "graph":
        n = args.n if args.n is not None else (args.max_n or 8)
        _emit("graph", random_graph(n, args.p, args.seed))
        return 0
    if args.what == "signed":
        n = args.n if args.n is not None else (args.max_n or 8)
        _emit("signed-graph", random_balanced_signed(n, args.seed))
        return 0
    if args.what == "network":
        n = args.n if args.n is not None else (args.max_n or 4)
        _emit("network", random_network(n, args.seed))
        return 0
    count = args.n if args.n is not None else (args.max_n or 8)
    pts = random_angles(count, args.seed)
    print(json.dumps([format_angle(a) for a in pts]))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlesign",
        description="Signed-graph balance, circle models, and 56_65 network solving.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("balance", help="solve or check balance rules")
    p.add_argument("action", choices=["find", "check"])
    p.add_argument("--rule", choices=sorted(_RULES), default="anti-even")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_balance)

    p = sub.add_parser("truemper", help="local obstruction checks and witnesses")
    p.add_argument("action", choices=["check", "witnesses"])
    p.add_argument("--rule", choices=sorted(_RULES), default="anti-even")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_truemper)

    p = sub.add_parser("c3", help="circle-graph embeddability")
    p.add_argument("action", choices=["embed", "test"])
    p.add_argument("--den-cap", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(fn=_cmd_c3)

    p = sub.add_parser("sigma", help="the universal labelling")
    p.add_argument("action", choices=["label", "embed", "extend"])
    p.add_argument("--den-cap", type=int, default=None)
    p.add_argument("file", nargs="?")
    p.add_argument("angles", nargs="*")
    p.set_defaults(fn=_cmd_sigma)

    p = sub.add_parser("nsp", help="network satisfaction for 56_65")
    p.add_argument("action", choices=["solve", "verify", "pc"])
    p.add_argument("file")
    p.add_argument("cert", nargs="?")
    p.set_defaults(fn=_cmd_nsp)

    p = sub.add_parser("chic", help="circular chromatic number")
    p.add_argument("action", choices=["value", "lt3"])
    p.add_argument("file")
    p.set_defaults(fn=_cmd_chic)

    p = sub.add_parser("gen", help="seeded random inputs")
    p.add_argument("what", choices=["graph", "signed", "network", "points"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--p", type=float, default=0.5)
    p.set_defaults(fn=_cmd_gen)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    # sigma label/extend take angles; the optional file slot shifts
    if getattr(args, "fn", None) is _cmd_sigma:
        if args.action == "label":
            if args.file is not None:
                args.angles = [args.file] + list(args.angles)
                args.file = None
        elif args.file is None:
            print("error: missing document argument", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except _CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except WitnessSearchExhaustedError as exc:
        print(f"error: witness search exhausted: {exc}", file=sys.stderr)
        return 2
    except CircleSignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

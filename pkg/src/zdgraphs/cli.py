"""Command-line front end.

Exit codes: 0 success, 2 usage or model-spec error, 3 resource cap exceeded,
4 verification failure (an expected-pass entry failed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .cardinal import Cardinal, verdict
from .errors import ResourceError, ZDGraphError
from .graph import to_dot
from .quotient import build_quotient, class_table, quotient_to_dot
from .ring import ENUMERATION_CAP, GraphKind, ModelConfig, build_graph
from .verification import SUITES, iso_report, run_suite

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_FAIL = 0, 2, 3, 4


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_build(args: argparse.Namespace) -> int:
    cfg = ModelConfig.parse(args.model)
    kind = GraphKind(args.kind)
    g = build_graph(cfg, kind, cap=args.cap)
    if g.vertex_count == 0:
        print(f"warning: the {kind.value} graph of {cfg} is empty", file=sys.stderr)
    if args.quotient and g.vertex_count:
        q = build_quotient(g)
        dot = quotient_to_dot(q)
        doc = {"schema": 1, "model": cfg.to_json(), "kind": kind.value, "quotient": class_table(q)}
    else:
        dot = to_dot(g)
        doc = {
            "schema": 1,
            "model": cfg.to_json(),
            "kind": kind.value,
            "vertices": [f.to_json() for f in g.labels or ()],
            "edges": [list(e) for e in g.edges()],
        }
    if args.dot:
        _write(args.dot, dot)
    if args.json:
        _write(args.json, _dump(doc))
    if not (args.dot or args.json):
        sys.stdout.write(dot)
    else:
        print(f"{kind.value} graph of {cfg}: {g.vertex_count} vertices, {g.edge_count} edges")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = ModelConfig.parse(args.model)
    report = run_suite(cfg, args.suite)
    for line in report.lines():
        print(line)
    if args.json:
        _write(args.json, report.to_json(timings=args.timings))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_iso(args: argparse.Namespace) -> int:
    cfg = ModelConfig.parse(args.model)
    doc = iso_report(cfg)
    verdict_ = "isomorphic" if doc["isomorphic"] else "non-isomorphic"
    print(f"{cfg}: {verdict_} (method: {doc['method']})")
    for m in doc.get("size_mismatches", ()):
        print(
            f"  class supp={m['class_support']} size {m['size']} -> "
            f"supp={m['image_support']} size {m['image_size']}"
        )
    if "degree_multisets" in doc:
        dm = doc["degree_multisets"]
        print(f"  degree multisets: zero-divisor {dm['zero-divisor']} vs comaximal {dm['comaximal']}")
    if doc.get("mapping") and not args.quiet:
        for src, dst in doc["mapping"]:
            print(f"  {tuple(src)} -> {tuple(dst)}")
    if args.json:
        _write(args.json, _dump(doc))
    return EXIT_OK


def cmd_cardinal(args: argparse.Namespace) -> int:
    x = Cardinal.parse(args.x)
    v = verdict(x)
    doc = {"schema": 1, **v.to_json()}
    print(f"assuming {v.assumption}: |X| = {x}: {'isomorphic' if v.isomorphic else 'non-isomorphic'}")
    if v.certificate is not None:
        zd, cm = v.certificate.pair
        print(f"  certificate: zero-divisor neighbourhood {zd} vs comaximal neighbourhood >= {cm}")
    print(f"  {v.note}")
    if x.is_finite:
        print("  for a concrete finite model run: iso X=<n>,a=<k>")
    if args.json:
        _write(args.json, _dump(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zdgraphs",
        description="Zero-divisor and comaximal graphs of finite function rings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build one graph and export DOT/JSON")
    b.add_argument("model", help="model spec X=<n>,a=<k>[,mode=support|field]")
    b.add_argument("kind", nargs="?", default=GraphKind.ZERO_DIVISOR.value, choices=[k.value for k in GraphKind])
    b.add_argument("--dot", metavar="PATH")
    b.add_argument("--json", metavar="PATH")
    b.add_argument("--quotient", action="store_true", help="export the twin quotient instead")
    b.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="maximum ring size to enumerate")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="compare closed-form predictions with graph oracles")
    v.add_argument("model")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--timings", action="store_true", help="include elapsed times in the JSON report")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("iso", help="decide whether the two graphs are isomorphic")
    i.add_argument("model")
    i.add_argument("--json", metavar="PATH")
    i.add_argument("--quiet", action="store_true", help="do not print the vertex mapping")
    i.set_defaults(func=cmd_iso)

    c = sub.add_parser("cardinal", help="verdict for a discrete space of the given cardinality")
    c.add_argument("--x", required=True, metavar="CARD", help="finite:<n>, aleph0 or continuum")
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_cardinal)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except ZDGraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

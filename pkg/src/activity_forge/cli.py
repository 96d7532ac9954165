"""Command-line front end.

Graph files are plain text::

    # triangle
    name: K3
    3
    0 1
    1 2
    0 2
    order: 2 0 1

The first data line is the vertex count, each following ``u v`` line adds an
edge (ids in file order, ``u u`` is a loop, repeated lines are parallel
edges). The optional ``order:`` line lists edge ids from smallest to largest.

Exit codes: 0 success, 2 bad input, 3 enumeration guard exceeded,
4 representations disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import invariants as inv
from ._backend import BACKEND
from .activity import EdgeOrder, check_independence, forest_activity_masks
from .bijection import DEFAULT_MAX_EXHAUSTIVE, activity_count_identity, classify, expand, verify_partition
from .errors import ActivityForgeError, GuardExceededError, InvalidOrderError, ParseError, PartitionViolation
from .graph import Multigraph, ids

SCHEMA = "activity-forge/1"

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_MISMATCH = 0, 2, 3, 4


@dataclass(frozen=True)
class GraphDocument:
    graph: Multigraph
    order: EdgeOrder | None = None
    name: str | None = None


def parse_graph(text: str) -> GraphDocument:
    n = None
    name = None
    order_line = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            name = line[5:].strip()
            continue
        if line.startswith("order:"):
            if order_line is not None:
                raise ParseError("duplicate order line", lineno)
            order_line = (lineno, line[6:].split())
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError(f"expected vertex count, got {line!r}", lineno)
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise ParseError(f"vertex {max(u, v)} out of range for {n} vertices", lineno)
        pairs.append((u, v))
    if n is None:
        raise ParseError("missing vertex count")
    g = Multigraph.from_edges(n, pairs)
    order = None
    if order_line is not None:
        lineno, fields = order_line
        try:
            order = EdgeOrder.from_sequence(int(f) for f in fields)
        except ValueError as exc:
            raise ParseError(f"bad order: {exc}", lineno) from None
        if len(order) != g.m:
            raise ParseError(f"order lists {len(order)} edges, graph has {g.m}", lineno)
    return GraphDocument(g, order, name)


def _parse_order(spec: str, m: int) -> EdgeOrder:
    if spec.startswith("random:"):
        return EdgeOrder.random(m, int(spec[7:]))
    fields = spec.replace(",", " ").split()
    try:
        order = EdgeOrder.from_sequence(int(f) for f in fields)
    except ValueError as exc:
        raise InvalidOrderError(str(exc)) from None
    if len(order) != m:
        raise InvalidOrderError(f"order lists {len(order)} edges, graph has {m}")
    return order


def _parse_assignment(spec: str) -> dict[str, Fraction]:
    out = {}
    for item in spec.split(","):
        if not item.strip():
            continue
        var, _, value = item.partition("=")
        if not _:
            raise ParseError(f"expected var=value in --eval, got {item!r}")
        try:
            out[var.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {value!r} in --eval") from None
    return out


def _forest_rep(fn):
    return lambda g, order, guard: fn(g, order)


def _subset_rep(fn):
    return lambda g, order, guard: fn(g, guard)


REPRESENTATIONS = {
    "tutte": {"forest": _forest_rep(inv.tutte_forest), "subset": _subset_rep(inv.tutte_subset)},
    "chromatic": {
        "forest": _forest_rep(inv.chromatic_forest),
        "subset": _subset_rep(inv.chromatic_subset),
        "broken-cycle": _forest_rep(inv.chromatic_broken_cycle),
    },
    "reliability": {"forest": _forest_rep(inv.reliability_tree), "subset": _subset_rep(inv.reliability_subset)},
    "sgf": {"forest": _forest_rep(inv.connected_gf_tree), "subset": _subset_rep(inv.connected_gf_subset)},
    "uprime": {"forest": _forest_rep(inv.uprime_forest), "subset": _subset_rep(inv.uprime_subset)},
}


class Mismatch(Exception):
    def __init__(self, payload):
        super().__init__("representations disagree")
        self.payload = payload


def _header(command, doc):
    out = {"schema": SCHEMA, "command": command}
    if doc.name:
        out["name"] = doc.name
    out["n_vertices"] = doc.graph.n_vertices
    out["n_edges"] = doc.graph.m
    return out


def _poly_command(command, doc, order, args):
    reps = REPRESENTATIONS[command]
    if args.rep == "all":
        chosen = list(reps)
    elif args.rep in reps:
        chosen = [args.rep]
    else:
        raise ParseError(f"{command} has no {args.rep!r} representation (choose from {', '.join(reps)}, all)")
    polys = {rep: reps[rep](doc.graph, order, args.max_exhaustive) for rep in chosen}
    out = _header(command, doc)
    out["rep"] = args.rep
    first = polys[chosen[0]]
    out["poly"] = first.to_dict()
    out["text"] = str(first)
    if args.rep == "all":
        diffs = {rep: first.diff(p) for rep, p in polys.items() if p != first}
        out["match"] = not diffs
        if diffs:
            out["representations"] = {rep: p.to_dict() for rep, p in polys.items()}
            out["diff"] = {f"{chosen[0]} vs {rep}": d for rep, d in diffs.items()}
            raise Mismatch(out)
    if args.eval:
        value = first.eval(_parse_assignment(args.eval))
        out["value"] = str(value)
    return out


def _activities(doc, order, args):
    out = _header("activities", doc)
    out["order"] = list(order.sequence)
    out["forests"] = [
        {"forest": ids(f), "internal": ids(i), "external": ids(e)}
        for f, i, e in forest_activity_masks(doc.graph, order)
    ]
    return out


def _classify(doc, order, args):
    if args.subset is None:
        raise ParseError("classify needs --subset")
    subset = [int(x) for x in args.subset.replace(",", " ").split()]
    t = classify(doc.graph, order, subset)
    back = expand(doc.graph, order, t)
    out = _header("classify", doc)
    out.update(
        subset=sorted(set(subset)),
        forest=sorted(t.forest),
        deletions=sorted(t.deletions),
        additions=sorted(t.additions),
        roundtrip="ok" if back == frozenset(subset) else "failed",
    )
    if out["roundtrip"] != "ok":
        raise Mismatch(out)
    return out


def _verify(doc, order, args):
    g = doc.graph
    out = _header("verify", doc)
    try:
        report = verify_partition(g, order, args.max_exhaustive)
        out["partition"] = "ok"
        out["covered"] = report.covered
    except PartitionViolation as exc:
        out["partition"] = f"violated: {exc}"
    out["identity_2E"] = activity_count_identity(g, order)
    bad = None
    forests = 0
    for f, _, _ in forest_activity_masks(g, order):
        forests += 1
        res = check_independence(g, order, f)
        if not res.ok and bad is None:
            bad = {"forest": ids(f), "pair": list(res.violation)}
    out["forests"] = forests
    out["independence"] = "ok" if bad is None else bad
    if out["partition"] != "ok" or not out["identity_2E"] or bad is not None:
        raise Mismatch(out)
    return out


COMMANDS = ("tutte", "chromatic", "reliability", "sgf", "uprime", "activities", "classify", "verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="activity-forge",
        description="Spanning-forest activities and exact Tutte-family polynomials.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("graph", help="graph file ('-' for standard input)")
    parser.add_argument("--rep", default="forest", choices=("forest", "subset", "broken-cycle", "all"))
    parser.add_argument("--order", help="edge ids smallest first ('2,0,1') or 'random:<seed>'")
    parser.add_argument("--subset", help="edge ids for classify, e.g. '0,2'")
    parser.add_argument("--eval", help="evaluate the result, e.g. 'x=3' or 'p=1/2'")
    parser.add_argument("--max-exhaustive", type=int, default=DEFAULT_MAX_EXHAUSTIVE,
                        help="largest edge count for 2^m enumerations (default %(default)s)")
    parser.add_argument("--version", action="version", version=f"%(prog)s ({BACKEND} kernels)")
    return parser


def _emit(payload, stream):
    stream.write(json.dumps(payload, indent=2) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.graph == "-":
            text = sys.stdin.read()
        else:
            with open(args.graph) as fh:
                text = fh.read()
        doc = parse_graph(text)
        order = _parse_order(args.order, doc.graph.m) if args.order else doc.order
        if order is None:
            order = EdgeOrder.identity(doc.graph.m)
        if args.command in REPRESENTATIONS:
            payload = _poly_command(args.command, doc, order, args)
        elif args.command == "activities":
            payload = _activities(doc, order, args)
        elif args.command == "classify":
            payload = _classify(doc, order, args)
        else:
            payload = _verify(doc, order, args)
    except GuardExceededError as exc:
        stderr.write(f"activity-forge: {exc}\n")
        return EXIT_GUARD
    except Mismatch as exc:
        _emit(exc.payload, stdout)
        return EXIT_MISMATCH
    except (ActivityForgeError, OSError, ValueError) as exc:
        stderr.write(f"activity-forge: {exc}\n")
        return EXIT_INPUT
    _emit(payload, stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

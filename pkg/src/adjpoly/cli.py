"""Command-line front end.

Subcommands cover the full pipeline: facet enumeration (`facets`), the
facet census (`count`), maximal bipartite subgraphs (`bipartite`), the
fast-path/oracle comparison (`oracle-check`), the simpliciality test
(`simplicial`), closed-form joined-cycle counts (`joined-cycles`), and
solver support exports (`kuramoto-support`).

Exit codes: 0 success, 1 input/usage error, 2 guard rail exceeded,
3 internal inconsistency (including an oracle mismatch).  JSON mode emits
exactly one document on stdout; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import counting, facets as facets_mod, geometry, kuramoto
from .errors import AdjPolyError, InternalInconsistency, TooLarge
from .graphs import Graph, enumerate_maximal_bipartite_subgraphs, parse_edge_list

JSON_VERSION = "v1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_INTERNAL = 3


@dataclasses.dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    # SUPPRESS keeps a subparser's default from clobbering a --quiet that
    # was already consumed by the main parser
    common.add_argument(
        "--quiet",
        action="store_true",
        default=argparse.SUPPRESS,
        help="suppress text output on stdout",
    )
    parser = _Parser(prog="adjpoly", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("facets", parents=[common], help="enumerate all facets")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", parents=[common], help="facet census")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(
        "bipartite", parents=[common], help="maximal bipartite subgraphs"
    )
    p.add_argument("file")

    p = sub.add_parser(
        "oracle-check",
        parents=[common],
        help="compare enumeration against the brute-force oracle",
    )
    p.add_argument("file")

    p = sub.add_parser("simplicial", parents=[common], help="simpliciality test")
    p.add_argument("file")

    p = sub.add_parser(
        "joined-cycles", parents=[common], help="closed-form joined-cycle counts"
    )
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)

    p = sub.add_parser(
        "kuramoto-support", parents=[common], help="solver support exports"
    )
    p.add_argument("file")
    p.add_argument("--facet", type=int, default=None, metavar="INDEX")
    p.add_argument("--homogenize", action="store_true")
    p.add_argument("--seed", type=int, default=None, metavar="U64")
    p.add_argument("--out", default=None, metavar="PATH")

    return parser


def _load_graph(path: str) -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise AdjPolyError(f"cannot read {path}: {exc}") from None
    return parse_edge_list(data)


def _facet_json(facet: geometry.Facet, cfg: geometry.PointConfiguration) -> dict:
    return {
        "normal": list(facet.normal.coeffs),
        "points": [list(p) for p in facet.points(cfg)],
        "subgraph_edges": [list(e) for e in facet.subgraph_edges],
        "dim": facet.dim,
        "corank": facet.corank,
    }


def _bipartition_lines(bip, indent: str = "  ") -> list[str]:
    plus = " ".join(str(v) for v in sorted(bip.plus))
    minus = " ".join(str(v) for v in sorted(bip.minus))
    return [f"{indent}V+ = {plus}", f"{indent}V- = {minus}"]


def _cmd_facets(args) -> tuple[int, str]:
    g = _load_graph(args.file)
    cfg = geometry.configuration_from_graph(g)
    classes = facets_mod.enumerate_facet_classes(g)
    total = sum(len(c.facets) for c in classes)
    if args.json:
        doc = {
            "version": JSON_VERSION,
            "vertex_count": g.vertex_count,
            "edge_count": g.m,
            "classes": [
                {
                    "subgraph_index": cls.subgraph_index,
                    "class_size": len(cls.facets),
                    "corank": cls.corank,
                    "facets": [_facet_json(f, cfg) for f in cls.facets],
                }
                for cls in classes
            ],
            "total": total,
        }
        return EXIT_OK, json.dumps(doc) + "\n"
    lines = [f"graph: N={g.vertex_count} m={g.m}"]
    for cls in classes:
        lines.append(
            f"class {cls.subgraph_index}: corank={cls.corank} "
            f"size={len(cls.facets)}"
        )
        lines.extend(_bipartition_lines(cls.subgraph.bipartition))
        for f in cls.facets:
            lines.append(
                "  normal " + " ".join(str(c) for c in f.normal.coeffs)
            )
    lines.append(f"total {total}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_count(args) -> tuple[int, str]:
    g = _load_graph(args.file)
    census = counting.facet_census(g)
    if args.json:
        doc = {
            "version": JSON_VERSION,
            "beta": census.beta,
            "classes": [
                {"corank": r.corank, "size": r.size} for r in census.records
            ],
            "total": census.total,
            "bound": census.bound,
        }
        return EXIT_OK, json.dumps(doc) + "\n"
    lines = [f"beta {census.beta}"]
    for idx, record in enumerate(census.records):
        lines.append(f"class {idx}: corank={record.corank} size={record.size}")
    per_corank = census.total_by_corank()
    per_subgraph = census.subgraphs_by_corank()
    for corank in sorted(per_corank):
        lines.append(
            f"corank {corank}: subgraphs={per_subgraph[corank]} "
            f"facets={per_corank[corank]}"
        )
    lines.append(f"total {census.total}")
    lines.append(f"bound {census.bound}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_bipartite(args) -> tuple[int, str]:
    g = _load_graph(args.file)
    subs = enumerate_maximal_bipartite_subgraphs(g)
    lines = [f"maximal bipartite subgraphs: {len(subs)}"]
    for idx, b in enumerate(subs):
        lines.append(
            f"subgraph {idx}: edges={len(b.edges)} corank={b.cyclomatic_number()}"
        )
        lines.extend(_bipartition_lines(b.bipartition))
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_oracle_check(args) -> tuple[int, str]:
    g = _load_graph(args.file)
    cfg = geometry.configuration_from_graph(g)
    fast = {f.normal.coeffs for f in facets_mod.enumerate_all_facets(g)}
    oracle = {f.normal.coeffs for f in geometry.brute_force_facets(cfg)}
    if fast == oracle:
        return EXIT_OK, f"{len(fast)} == {len(oracle)}\n"
    return EXIT_INTERNAL, f"{len(fast)} != {len(oracle)}\n"


def _cmd_simplicial(args) -> tuple[int, str]:
    g = _load_graph(args.file)
    verdict = "yes" if facets_mod.is_simplicial(g) else "no"
    return EXIT_OK, f"simplicial {verdict}\n"


def _cmd_joined_cycles(args) -> tuple[int, str]:
    counts = counting.joined_cycles_count(args.m1, args.m2)
    return (
        EXIT_OK,
        f"corank0={counts.corank0} corank1={counts.corank1} "
        f"total={counts.total}\n",
    )


def _cmd_kuramoto_support(args) -> tuple[int, str]:
    if args.homogenize and args.facet is not None:
        raise _UsageError("--homogenize cannot be combined with --facet")
    if args.homogenize and args.seed is not None:
        raise _UsageError("--seed requires a support export, not --homogenize")
    g = _load_graph(args.file)
    if args.homogenize:
        data = kuramoto.homogenization_data(g)
        text = kuramoto.homogenization_file_text(data, g.n)
    elif args.facet is not None:
        all_facets = facets_mod.enumerate_all_facets(g)
        if not 0 <= args.facet < len(all_facets):
            raise AdjPolyError(
                f"--facet {args.facet} out of range 0..{len(all_facets) - 1}"
            )
        support = kuramoto.facet_subsystem_support(g, all_facets[args.facet])
        coeffs = (
            kuramoto.seeded_coefficients(len(support), args.seed)
            if args.seed is not None
            else None
        )
        text = kuramoto.support_file_text(support, coefficients=coeffs)
    else:
        support = kuramoto.unmixed_support(g)
        lifts = [lift for _, lift in kuramoto.homotopy_lift(support)]
        coeffs = (
            kuramoto.seeded_coefficients(len(support), args.seed)
            if args.seed is not None
            else None
        )
        text = kuramoto.support_file_text(support, lifts=lifts, coefficients=coeffs)
    if args.out is not None:
        Path(args.out).write_text(text, encoding="utf-8")
        return EXIT_OK, ""
    return EXIT_OK, text


_COMMANDS = {
    "facets": _cmd_facets,
    "count": _cmd_count,
    "bipartite": _cmd_bipartite,
    "oracle-check": _cmd_oracle_check,
    "simplicial": _cmd_simplicial,
    "joined-cycles": _cmd_joined_cycles,
    "kuramoto-support": _cmd_kuramoto_support,
}


def run(argv: list[str]) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandResult(EXIT_INPUT, "", f"usage error: {exc}\n")
    except SystemExit as exc:  # argparse --help prints and exits itself
        return CommandResult(int(exc.code or 0), "", "")
    try:
        code, out = _COMMANDS[args.command](args)
    except _UsageError as exc:
        return CommandResult(EXIT_INPUT, "", f"usage error: {exc}\n")
    except TooLarge as exc:
        return CommandResult(EXIT_GUARD, "", f"guard exceeded: {exc}\n")
    except InternalInconsistency as exc:
        return CommandResult(EXIT_INTERNAL, "", f"internal inconsistency: {exc}\n")
    except AdjPolyError as exc:
        return CommandResult(EXIT_INPUT, "", f"error: {exc}\n")
    # --quiet drops human-readable text; JSON documents, support exports,
    # and --out files are the product and are never suppressed
    quiet_applies = (
        not getattr(args, "json", False) and args.command != "kuramoto-support"
    )
    if getattr(args, "quiet", False) and quiet_applies:
        out = ""
    return CommandResult(code, out, "")


def main() -> None:
    result = run(sys.argv[1:])
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    sys.exit(result.exit_code)

"""Command-line surface: generation, corona products, solving, labeling,
verification, and the theorem audit.

Exit codes: 0 success, 2 malformed input, 3 resource limit (cap or
timeout, or an unresolved audit row), 4 internal verification failure.
JSON goes to standard output; human-readable tables go to standard error
under --verbose.  All output is deterministic except ``elapsed_secs``
fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .graph_io import EdgeListParseError, read_edge_list, to_dot, write_edge_list
from .graphs import FAMILIES, Graph, edge_corona, generate, gnp_random_graph
from .labeler import LabelingConstructionError, construct_optimal, construct_weak_iasi
from .setlabels import MissingLabelError, VertexLabeling, verify
from .solver import (
    DEFAULT_BRUTE_CAP,
    DEFAULT_TIMEOUT_SECS,
    MonoPattern,
    ResourceLimitError,
    sparing_bruteforce,
    sparing_exact,
)
from .theorems import THEOREM_IDS, UnknownTheoremError, check_theorem

EX_OK = 0
EX_INPUT = 2
EX_RESOURCE = 3
EX_INTERNAL = 4


@dataclass
class RunConfig:
    """One command per invocation; paths are validated before any work."""

    command: str
    args: argparse.Namespace


def _emit_json(payload: dict, out: str | None = None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str) -> Graph:
    return read_edge_list(Path(path).read_text())


def _read_labeling(path: str) -> VertexLabeling:
    return VertexLabeling.from_json_dict(json.loads(Path(path).read_text()))


def _read_pattern(path: str) -> MonoPattern:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or "non_mono" not in data:
        raise ValueError('pattern JSON must be an object with "non_mono"')
    ids = data["non_mono"]
    if not isinstance(ids, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in ids
    ):
        raise ValueError('"non_mono" must be an array of vertex ids')
    return MonoPattern(frozenset(ids))


def _check_inputs_exist(args: argparse.Namespace) -> None:
    for attr in ("graph", "g1", "g2", "labeling", "pattern"):
        path = getattr(args, attr, None)
        if path is not None and not Path(path).is_file():
            raise FileNotFoundError(f"input file not found: {path}")


def _parse_range(text: str) -> list[int]:
    """'2..5' -> [2, 3, 4, 5]; a bare integer is a single point."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        if len(args.params) != 1:
            raise ValueError("random takes one parameter: the vertex count")
        graph = gnp_random_graph(args.params[0], args.p, args.seed)
    else:
        graph = generate(args.family, args.params)
    text = write_edge_list(graph)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def _cmd_corona(args: argparse.Namespace) -> int:
    g1 = _read_graph(args.g1)
    g2 = _read_graph(args.g2)
    product, provenance = edge_corona(g1, g2)
    Path(args.out_graph).write_text(write_edge_list(product))
    _emit_json(provenance.to_json_dict(), args.out_provenance)
    if args.verbose:
        print(
            f"corona: {product.vertex_count} vertices, {product.edge_count} edges",
            file=sys.stderr,
        )
    return EX_OK


def _cmd_sparing(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    if args.method == "bruteforce":
        result = sparing_bruteforce(graph, cap=args.cap)
    else:
        result = sparing_exact(graph, timeout_secs=args.timeout_secs)
    _emit_json(result.to_json_dict())
    if args.verbose:
        print(
            f"sparing number {result.value} via {result.method}, "
            f"{result.explored} nodes",
            file=sys.stderr,
        )
    return EX_OK


def _cmd_label(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    if args.pattern:
        pattern = _read_pattern(args.pattern)
        labeling = construct_weak_iasi(graph, pattern)
    else:
        _result, labeling = construct_optimal(graph, timeout_secs=args.timeout_secs)
    _emit_json(labeling.to_json_dict(), args.out)
    return EX_OK


def _cmd_verify_labeling(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    labeling = _read_labeling(args.labeling)
    verdict = verify(graph, labeling)
    _emit_json(verdict.to_json_dict())
    return EX_OK


def _cmd_check_theorems(args: argparse.Namespace) -> int:
    start = time.monotonic()
    report = check_theorem(
        args.id,
        m_values=_parse_range(args.m) if args.m else None,
        n_values=_parse_range(args.n) if args.n else None,
        timeout_secs=args.timeout_secs,
    )
    payload = report.to_json_dict()
    payload["elapsed_secs"] = time.monotonic() - start
    _emit_json(payload, args.out)
    if args.verbose:
        print(report.render_text(), file=sys.stderr, end="")
    return EX_OK if report.all_resolved else EX_RESOURCE


def _cmd_export_dot(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    labeling = _read_labeling(args.labeling) if args.labeling else None
    text = to_dot(graph, labeling)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EX_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "corona": _cmd_corona,
    "sparing": _cmd_sparing,
    "label": _cmd_label,
    "verify-labeling": _cmd_verify_labeling,
    "check-theorems": _cmd_check_theorems,
    "export-dot": _cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakiasi",
        description="Sparing numbers, weak set-indexer labelings, and the "
        "edge-corona theorem audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family member as an edge list")
    p.add_argument("family", choices=list(FAMILIES) + ["random"])
    p.add_argument("params", type=int, nargs="+", help="family parameters")
    p.add_argument("--p", type=float, default=0.3, help="edge probability (random)")
    p.add_argument("--seed", type=int, default=0, help="seed (random)")
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("corona", help="edge corona of two graphs")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-provenance", required=True)
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("sparing", help="exact sparing number of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=["exact", "bruteforce"], default="exact")
    p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT_SECS)
    p.add_argument("--cap", type=int, default=DEFAULT_BRUTE_CAP)
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("label", help="construct a verified weak set-indexer")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", help="pattern JSON; default: solve for the optimum")
    p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT_SECS)
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("verify-labeling", help="check a labeling JSON against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)

    p = sub.add_parser("check-theorems", help="audit a closed form against the oracle")
    p.add_argument("--id", required=True, help=f"one of: {', '.join(THEOREM_IDS)}")
    p.add_argument("--m", help="range like 2..5 (family theorems)")
    p.add_argument("--n", help="range like 2..5")
    p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT_SECS)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("export-dot", help="DOT rendering, optionally labeled")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling")
    p.add_argument("--out", help="output path (default: stdout)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(command=args.command, args=args)
    try:
        _check_inputs_exist(args)
        return _COMMANDS[config.command](args)
    except LabelingConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INTERNAL
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_RESOURCE
    except (
        EdgeListParseError,
        UnknownTheoremError,
        MissingLabelError,
        ValueError,
        FileNotFoundError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INPUT


if __name__ == "__main__":
    sys.exit(main())

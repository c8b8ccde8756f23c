"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 resource bound exceeded, 4
verification failure. Outputs are deterministic: identical inputs and seed
produce byte-identical JSON.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import configspace, embedding, graphs, halo as halo_mod
from .errors import (
    InputError,
    SizeExceededError,
    VerificationError,
)
from .graphs import Coloring, SimpleGraph
from .raag import GroupWord, is_trivial

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _load_graph(path: str) -> SimpleGraph:
    return graphs.graph_from_json_dict(_load_json(path))


def _resolve_coloring(args, graph: SimpleGraph) -> Coloring:
    if getattr(args, "coloring", None):
        return graphs.coloring_from_json_dict(graph, _load_json(args.coloring))
    if getattr(args, "exact", False):
        return graphs.chromatic_number(graph)
    return graphs.greedy_color(graph)


def _emit(args, payload: dict, text: str | None = None, dot: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(graphs.dumps_canonical(payload))
    elif args.format == "dot" and dot is not None:
        sys.stdout.write(dot)
    else:
        sys.stdout.write(text if text is not None else graphs.dumps_canonical(payload))


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    coloring = (
        graphs.chromatic_number(g) if args.exact else graphs.greedy_color(g)
    )
    text = "\n".join(f"{v} {c}" for v, c in coloring.assignment) + "\n"
    _emit(args, coloring.to_json_dict(), text=text, dot=graphs.to_dot(g, coloring))
    return EXIT_OK


def cmd_halo(args) -> int:
    g = _load_graph(args.input)
    coloring = _resolve_coloring(args, g)
    built = halo_mod.build_halo(g, coloring)
    sub = halo_mod.subdivided_halo(built, coloring.color_count, args.path_threshold)
    report = halo_mod.verify_halo(sub)
    payload = {
        "halo": halo_mod.halo_to_json_dict(sub),
        "report": report.to_json_dict(),
        "planar": graphs.is_planar(sub.gamma),
        "path_threshold": args.path_threshold,
    }
    text = (
        f"loops: {len(sub.artin_loops)}\n"
        f"gamma vertices: {sub.gamma.n_vertices}\n"
        f"gamma edges: {sub.gamma.n_edges}\n"
        f"planar: {str(payload['planar']).lower()}\n"
        f"verified: {str(report.ok).lower()}\n"
    )
    _emit(args, payload, text=text, dot=halo_mod.halo_to_dot(sub))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_configspace(args) -> int:
    g = _load_graph(args.input)
    space = configspace.build_udc(g, args.n, cell_budget=args.budget)
    payload = space.counts_json_dict()
    text = (
        f"n: {payload['n']}\n"
        f"zero_cells: {payload['zero_cells']}\n"
        f"one_cells: {payload['one_cells']}\n"
    )
    _emit(args, payload, text=text)
    return EXIT_OK


def cmd_embed(args) -> int:
    g = _load_graph(args.input)
    coloring = _resolve_coloring(args, g)
    ctx = embedding.build_context(g, coloring, args.path_threshold)
    word = GroupWord.parse(args.word)
    squared = not args.unsquared
    image = embedding.phi_psi(word, ctx, squared=squared)
    trivial = is_trivial(image, ctx.a_gamma)
    payload = {
        "word": str(word),
        "squared": squared,
        "image": str(image),
        "image_length": len(image),
        "trivial": trivial,
    }
    text = (
        f"word: {word}\n"
        f"squared: {str(squared).lower()}\n"
        f"image_length: {len(image)}\n"
        f"trivial: {str(trivial).lower()}\n"
    )
    _emit(args, payload, text=text)
    return EXIT_OK


def cmd_verify(args) -> int:
    data = _load_json(args.input)
    if isinstance(data, dict) and "loops" in data:
        given = halo_mod.halo_from_json_dict(data)
        delta, coloring, halo = given.delta, given.coloring, given
    else:
        delta = graphs.graph_from_json_dict(data)
        coloring = _resolve_coloring(args, delta)
        halo = None
    report = embedding.verify_suite(
        delta,
        coloring,
        max_len=args.max_len,
        sample_count=args.samples,
        seed=args.seed,
        path_threshold=args.path_threshold,
        halo=halo,
    )
    _emit(args, report.to_json_dict(), text=report.to_text())
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagbraid",
        description=(
            "Build halo graphs from colored graphs, realize generators as "
            "braid loops, and verify the embedding machinery."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, coloring_opts=True):
        p.add_argument("--input", required=True, help="path to a graph JSON file")
        p.add_argument(
            "--format", choices=("json", "dot", "text"), default="json",
            help="output format (default json)",
        )
        if coloring_opts:
            p.add_argument("--coloring", help="path to a coloring JSON file")
            p.add_argument(
                "--exact", action="store_true",
                help="use the exact chromatic coloring instead of the greedy one",
            )
        p.add_argument(
            "--path-threshold", choices=graphs.PATH_THRESHOLDS, default="paper",
            dest="path_threshold",
            help="edge-count convention for arcs between essential vertices",
        )

    p_color = sub.add_parser("color", help="color a graph")
    p_color.add_argument("--input", required=True)
    p_color.add_argument("--exact", action="store_true")
    p_color.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p_color.set_defaults(func=cmd_color)

    p_halo = sub.add_parser("halo", help="build, subdivide and verify a halo")
    common(p_halo)
    p_halo.set_defaults(func=cmd_halo)

    p_cfg = sub.add_parser("configspace", help="count configuration-space cells")
    p_cfg.add_argument("--input", required=True)
    p_cfg.add_argument("--format", choices=("json", "text"), default="json")
    p_cfg.add_argument("--n", type=int, default=2, help="strand count (default 2)")
    p_cfg.add_argument(
        "--budget", type=int, default=1_000_000, help="cell budget (default 1000000)"
    )
    p_cfg.set_defaults(func=cmd_configspace)

    p_embed = sub.add_parser("embed", help="map a word through the composite")
    common(p_embed)
    p_embed.add_argument("word", help="word in the text format, e.g. 'c b a b^-1'")
    p_embed.add_argument(
        "--unsquared", action="store_true",
        help="send generators to single loop traversals instead of squares",
    )
    p_embed.set_defaults(func=cmd_embed)

    p_verify = sub.add_parser("verify", help="run the full verification suite")
    common(p_verify)
    p_verify.add_argument("--max-len", type=int, default=4, dest="max_len")
    p_verify.add_argument("--samples", type=int, default=500)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

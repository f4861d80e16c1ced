"""Command-line entry point: build, stats, sample, query."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, config_keys, make_config, parse_config_file
from .pipeline import REPORT_FILE, StageError, load_built_graph, run_build
from .store import (
    GraphFormatError,
    NodeLookupError,
    format_stats,
    query_entails,
    sample_for_annotation,
    stats,
)

_INT_KEYS = {"k", "min_pred_freq", "seed", "workers"}
_FLOAT_KEYS = {"tau", "lambda", "tau_a", "tau_e"}


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key=value configuration file")
    for key in config_keys():
        kwargs: dict = {"default": None}
        if key in _INT_KEYS:
            kwargs["type"] = int
        elif key in _FLOAT_KEYS:
            kwargs["type"] = float
        if key == "lambda":
            kwargs["dest"] = "lambda_flag"
        parser.add_argument(f"--{key}", **kwargs)


def _effective_config(args: argparse.Namespace):
    raw: dict[str, str] = {}
    base_dir = Path(".")
    if args.config:
        raw.update(parse_config_file(args.config))
        base_dir = Path(args.config).resolve().parent
    for key in config_keys():
        attr = "lambda_flag" if key == "lambda" else key
        value = getattr(args, attr, None)
        if value is not None:
            raw[key] = str(value)
            if key in ("corpus", "taxonomy", "verb_hierarchy", "light_verbs", "output_dir"):
                # Flags are interpreted relative to the caller, not the config file.
                raw[key] = str(Path(str(value)).resolve())
    return make_config(raw, base_dir, require_inputs=args.command == "build")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evgraph",
        description="Build and query an eventuality entailment graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run the full construction pipeline")
    _add_config_flags(p_build)

    p_stats = sub.add_parser("stats", help="per-type edge counts of a built graph")
    _add_config_flags(p_stats)

    p_sample = sub.add_parser("sample", help="sample edges for annotation")
    _add_config_flags(p_sample)
    p_sample.add_argument("--n", type=int, default=100, help="pairs per type")
    p_sample.add_argument("--out", default=None, help="output file (default: stdout)")

    p_query = sub.add_parser("query", help="does one eventuality entail another?")
    _add_config_flags(p_query)
    p_query.add_argument("premise")
    p_query.add_argument("hypothesis")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _effective_config(args)
    except (ConfigError, OSError) as exc:
        print(f"error[config]: {exc}", file=sys.stderr)
        return 1

    try:
        if args.command == "build":
            result = run_build(cfg)
            counts = result.report["counts"]
            print(
                f"built {counts['edges_total']} edges over "
                f"{counts['eventualities']} eventualities "
                f"({counts['paths']} predicate paths); "
                f"report: {Path(cfg.output_dir) / REPORT_FILE}"
            )
            return 0

        graph = load_built_graph(cfg.output_dir)
        if args.command == "stats":
            sys.stdout.write(format_stats(stats(graph)))
        elif args.command == "sample":
            lines = sample_for_annotation(graph, args.n, cfg.seed)
            text = "".join(line + "\n" for line in lines)
            if args.out:
                Path(args.out).write_text(text, encoding="utf-8")
            else:
                sys.stdout.write(text)
        elif args.command == "query":
            result = query_entails(graph, args.premise, args.hypothesis)
            print(result.kind)
            for edge in result.trail:
                print(
                    f"  {graph.nodes[edge.from_id].text} -> "
                    f"{graph.nodes[edge.to_id].text} "
                    f"[{edge.provenance}, score={edge.local_score:.4f}]"
                )
        return 0
    except StageError as exc:
        print(f"error[{exc.stage}]: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, FileNotFoundError) as exc:
        print(f"error[graph]: {exc}", file=sys.stderr)
        return 1
    except NodeLookupError as exc:
        print(f"error[query]: {exc.args[0]}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Exit codes: 0 clean (nothing detected), 1 configuration error, 2 backend
failure, 3 plagiarism detected. "Detected" is a result, not an error, so
it gets its own success code for scripting.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .config import (
    REPORT_FORMATS,
    SEARCH_BACKENDS,
    TRANSLATION_BACKENDS,
    build_config,
    parse_config_file,
)
from .errors import BackendUnavailable, ConfigError, EmptyCorpus, PipelineError
from .pipeline import compare, detect, ensure_index, load_stoplist
from .report import render, render_figure

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_BACKEND_ERROR = 2
EXIT_DETECTED = 3


def _add_common_options(parser: argparse.ArgumentParser):
    parser.add_argument("--config", type=Path, help="key=value config file")
    parser.add_argument("--corpus", type=Path, help="corpus directory")
    parser.add_argument("--source-lang", dest="source_language",
                        help="suspect language (default: auto-detect)")
    parser.add_argument("--corpus-lang", dest="corpus_language",
                        help="corpus language (default: en)")
    parser.add_argument("--k", type=int, help="gram length (default: 4)")
    parser.add_argument("--threshold", type=float,
                        help="detection threshold on R (default: 0.2)")
    parser.add_argument("--window", dest="w", type=int,
                        help="query window in tokens (default: 8)")
    parser.add_argument("--top-k", dest="top_k", type=int,
                        help="hits kept per query (default: 10)")
    parser.add_argument("--cap", type=int,
                        help="max candidates scored (default: 50)")
    parser.add_argument("--max-queries", dest="max_queries", type=int,
                        help="max queries issued (default: 50)")
    parser.add_argument("--stoplist", type=Path, help="stop-word list file")
    parser.add_argument("--dictionary", type=Path, help="bilingual dictionary TSV")
    parser.add_argument("--translation-backend", dest="translation_backend",
                        choices=TRANSLATION_BACKENDS)
    parser.add_argument("--search-backend", dest="search_backend",
                        choices=SEARCH_BACKENDS)
    parser.add_argument("--translation-endpoint", dest="translation_endpoint")
    parser.add_argument("--search-endpoint", dest="search_endpoint")
    parser.add_argument("--format", choices=REPORT_FORMATS,
                        help="report format (default: text)")
    parser.add_argument("--figure", type=Path,
                        help="also save a similarity bar chart to this file")


_CONFIG_KEYS = (
    "corpus", "source_language", "corpus_language", "k", "threshold", "w", "top_k",
    "cap", "max_queries", "stoplist", "dictionary", "translation_backend",
    "search_backend", "translation_endpoint", "search_endpoint", "format",
)


def _config_from_args(args: argparse.Namespace):
    file_values = parse_config_file(args.config) if args.config else None
    overrides = {key: getattr(args, key, None) for key in _CONFIG_KEYS}
    return build_config(file_values, overrides)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossplag",
        description="Cross-language plagiarism detection via sentence fingerprints",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="index a corpus directory")
    p_ingest.add_argument("corpus_dir", type=Path)
    _add_common_options(p_ingest)

    p_detect = sub.add_parser("detect", help="check a suspect file against the corpus")
    p_detect.add_argument("suspect", type=Path)
    _add_common_options(p_detect)

    p_compare = sub.add_parser("compare", help="score one pair of files")
    p_compare.add_argument("file_a", type=Path)
    p_compare.add_argument("file_b", type=Path)
    _add_common_options(p_compare)
    return parser


def cmd_ingest(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    stoplist = load_stoplist(config)
    index, warnings, rebuilt = ensure_index(args.corpus_dir, config, stoplist)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if rebuilt:
        print(f"ingested {index.doc_count} documents")
    else:
        print(f"cache up to date ({index.doc_count} documents)")
    return EXIT_OK


def cmd_detect(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    if not config.corpus:
        raise ConfigError("detect requires --corpus (or corpus in the config file)")
    report = detect(args.suspect, config.corpus, config)
    sys.stdout.write(render(report, config.format))
    if args.figure:
        render_figure(report, args.figure)
    return EXIT_DETECTED if report.detected else EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    report = compare(args.file_a, args.file_b, config)
    sys.stdout.write(render(report, config.format))
    if args.figure:
        render_figure(report, args.figure)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"ingest": cmd_ingest, "detect": cmd_detect, "compare": cmd_compare}
    try:
        return handlers[args.command](args)
    except BackendUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BACKEND_ERROR
    except (ConfigError, EmptyCorpus, PipelineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Command-line runner for the mining pipeline.

Exit codes: 0 on success, 1 for input problems (missing or malformed files,
unknown document ids), 2 for contradictory options.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .analytics import (
    build_matrix,
    phrases_for_document,
    top_k,
    write_matrix_csv,
    write_phrases_csv,
    write_run_json,
)
from .corpus import IngestError, read_csv, read_jsonl, read_medline, read_plaintext_dir
from .extractor import ExtractConfig, load_exclusions
from .pipeline import mine_corpus
from .rectifier import RectifyConfig
from .segmenter import SegmenterConfig, load_stop_list

FORMATS = ("dir", "jsonl", "csv", "medline")


@dataclass
class RunConfig:
    """One CLI invocation, fully resolved."""

    input: Path
    format: str
    id_field: str = "id"
    text_field: str = "text"
    min_n: int = 2
    max_n: int = 8
    min_freq: int = 3
    stop_words: Path | None = None
    exclude: Path | None = None
    punct: str | None = None
    top: int | None = None
    out_phrases: Path | None = None
    out_matrix: Path | None = None
    out_json: Path | None = None
    out_plot: Path | None = None
    doc_report: str | None = None
    threads: int = 1
    keep_index: bool = True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phrasemine",
        description="Mine principal phrases from a document corpus.",
    )
    parser.add_argument("--input", required=True, type=Path,
                        help="corpus file, or directory of .txt files for --format dir")
    parser.add_argument("--format", required=True, choices=FORMATS,
                        help="input format")
    parser.add_argument("--id-field", default="id",
                        help="id field/column for jsonl and csv (default: id)")
    parser.add_argument("--text-field", default="text",
                        help="text field/column for jsonl and csv (default: text)")
    parser.add_argument("--min-n", type=int, default=2, metavar="N",
                        help="shortest phrase length in words (default: 2)")
    parser.add_argument("--max-n", type=int, default=8, metavar="N",
                        help="longest phrase length in words (default: 8)")
    parser.add_argument("--min-freq", type=int, default=3, metavar="F",
                        help="frequency threshold for designation (default: 3)")
    parser.add_argument("--stop-words", type=Path, metavar="PATH",
                        help="stop word file replacing the built-in list")
    parser.add_argument("--exclude", type=Path, metavar="PATH",
                        help="file of phrases to exclude, one per line")
    parser.add_argument("--punct", metavar="CHARS",
                        help="characters that bound blocks, replacing the default set")
    parser.add_argument("--top", type=int, metavar="K",
                        help="print the K most frequent phrases")
    parser.add_argument("--out-phrases", type=Path, metavar="PATH",
                        help="write the phrase table as CSV")
    parser.add_argument("--out-matrix", type=Path, metavar="PATH",
                        help="write the document-phrase matrix as CSV")
    parser.add_argument("--out-json", type=Path, metavar="PATH",
                        help="write phrases and matrix as one JSON file")
    parser.add_argument("--out-plot", type=Path, metavar="PATH",
                        help="render a bar chart of the top phrases to an image file")
    parser.add_argument("--doc-report", metavar="DOC_ID",
                        help="print the phrases found in one document")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1, metavar="N",
                        help="worker threads for extraction (default: CPU count)")
    parser.add_argument("--no-keep-index", action="store_true",
                        help="drop the candidate index after rectification to save memory")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    return parser


def parse_args(argv) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.min_n < 1:
        parser.error("--min-n must be at least 1")
    if args.max_n < args.min_n:
        parser.error("--max-n must not be smaller than --min-n")
    if args.min_freq < 1:
        parser.error("--min-freq must be at least 1")
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if args.top is not None and args.top < 0:
        parser.error("--top must not be negative")
    if args.punct is not None:
        if not args.punct:
            parser.error("--punct must name at least one character")
        if any(ch.isspace() for ch in args.punct):
            parser.error("--punct must not contain whitespace")
    return RunConfig(
        input=args.input,
        format=args.format,
        id_field=args.id_field,
        text_field=args.text_field,
        min_n=args.min_n,
        max_n=args.max_n,
        min_freq=args.min_freq,
        stop_words=args.stop_words,
        exclude=args.exclude,
        punct=args.punct,
        top=args.top,
        out_phrases=args.out_phrases,
        out_matrix=args.out_matrix,
        out_json=args.out_json,
        out_plot=args.out_plot,
        doc_report=args.doc_report,
        threads=args.threads,
        keep_index=not args.no_keep_index,
    )


def _read_corpus(config: RunConfig):
    if config.format == "dir":
        return read_plaintext_dir(config.input)
    if config.format == "jsonl":
        return read_jsonl(config.input, config.id_field, config.text_field)
    if config.format == "csv":
        return read_csv(config.input, config.id_field, config.text_field)
    return read_medline(config.input)


def run(config: RunConfig) -> int:
    started = time.perf_counter()
    try:
        corpus = _read_corpus(config)
        stops = load_stop_list(config.stop_words)
        exclusions = load_exclusions(config.exclude) if config.exclude else frozenset()
    except (IngestError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    skipped = int(corpus.meta.get("skipped_no_abstract", "0"))
    if skipped:
        print(f"note: skipped {skipped} record(s) without an abstract", file=sys.stderr)

    try:
        seg_config = (
            SegmenterConfig(punctuation=frozenset(config.punct))
            if config.punct is not None
            else SegmenterConfig()
        )
        ext_config = ExtractConfig(
            min_n=config.min_n,
            max_n=config.max_n,
            stops=stops,
            exclusions=exclusions,
        )
        rect_config = RectifyConfig(min_frequency=config.min_freq)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    result = mine_corpus(
        corpus,
        segmenter_config=seg_config,
        extract_config=ext_config,
        rectify_config=rect_config,
        threads=config.threads,
        keep_index=config.keep_index,
    )

    doc_position = None
    if config.doc_report is not None:
        positions = {doc.id: i for i, doc in enumerate(corpus)}
        doc_position = positions.get(config.doc_report)
        if doc_position is None:
            print(f"error: unknown document id: {config.doc_report}", file=sys.stderr)
            return 1

    try:
        if config.out_phrases is not None:
            write_phrases_csv(result.principals, config.out_phrases)
        if config.out_matrix is not None or config.out_json is not None:
            matrix = build_matrix(result.principals, corpus)
            if config.out_matrix is not None:
                write_matrix_csv(matrix, config.out_matrix)
            if config.out_json is not None:
                write_run_json(result.principals, matrix, config.out_json)
        if config.out_plot is not None:
            from .plotting import save_top_phrases_chart

            save_top_phrases_chart(result.principals, config.out_plot,
                                   k=config.top if config.top else 20)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    elapsed_ms = int((time.perf_counter() - started) * 1000)
    print(
        f"documents={result.documents} blocks={result.blocks} "
        f"candidates={result.candidates} principal_phrases={len(result.principals)} "
        f"elapsed_ms={elapsed_ms}"
    )
    if config.top is not None:
        for text, frequency in top_k(result.principals, config.top):
            print(f"{text}\t{frequency}")
    if doc_position is not None:
        for text, count in phrases_for_document(result.principals, doc_position):
            print(f"{text}\t{count}")
    return 0


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    config = parse_args(sys.argv[1:] if argv is None else argv)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands:
    top       ranked trending n-grams per window
    series    per-window counts and chi scores for chosen n-grams
    clusters  keyword-cluster mention shares per news category
    plot      turn a series table into an SVG line chart

Exit codes: 0 success, 1 usage or configuration error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import replace
from datetime import date
from pathlib import Path
from typing import IO, Iterator, Sequence

from . import __version__
from .clusters import COUNT_MODES, category_breakdowns, load_clusters
from .config import DEFAULT_N, OUTPUT_FORMATS, RunConfig
from .corpus import Corpus, DEFAULT_WINDOW_DAYS, load_corpus, parse_date, partition_windows
from .errors import (
    AnalysisError,
    ClusterError,
    IngestError,
    ParameterError,
    TrendError,
)
from .export import (
    CHI,
    OBSERVED,
    SeriesTable,
    read_series,
    write_breakdowns,
    write_rankings,
    write_series,
)
from .ngrams import FrequencyTable, count_frequencies
from .scoring import DEFAULT_TOP_K, rank_all, rank_window, term_series, top_k
from .svg import render_svg
from .text import (
    StopWordList,
    TextPipeline,
    default_stem_rules,
    default_stopwords,
    normalize,
    read_stem_rules,
    read_stopwords,
    stem_word,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _iso_date(value: str) -> date:
    try:
        return parse_date(value)
    except TrendError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _analysis_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("corpus and windows")
    g.add_argument("--input", "-i", required=True, help="JSONL corpus file ('-' for stdin)")
    g.add_argument("--from", dest="start", type=_iso_date, help="first day (YYYY-MM-DD)")
    g.add_argument("--to", dest="end", type=_iso_date, help="last day, inclusive")
    g.add_argument("--window-days", type=int, default=DEFAULT_WINDOW_DAYS)
    g = p.add_argument_group("text processing")
    g.add_argument("--mode", choices=("surface", "stem"), default="surface")
    g.add_argument("--stopwords", help="stop-word file (default: bundled Bengali list)")
    g.add_argument("--no-stopwords", action="store_true", help="disable stop-word filtering")
    g.add_argument("--stem-rules", help="suffix rule file (default: bundled rules)")
    g.add_argument("--bridge-stopwords", action="store_true",
                   help="let n-grams span removed stop words")
    g.add_argument("--keep-numeric", action="store_true",
                   help="keep purely numeric tokens as trend candidates")
    g = p.add_argument_group("output")
    g.add_argument("--format", "-f", choices=OUTPUT_FORMATS, default="tsv")
    g.add_argument("--out", "-o", help="output file (default: stdout)")
    g.add_argument("--jobs", "-j", type=int, default=1, help="worker threads")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="banglatrend", description="Trending topics in Bengali news")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _analysis_options()

    top = sub.add_parser("top", parents=[common], help="top-k trending n-grams per window")
    top.add_argument("--n", type=int, choices=(1, 2, 3), default=DEFAULT_N)
    top.add_argument("--top", "-k", dest="k", type=int, default=DEFAULT_TOP_K)
    top.add_argument("--min-count", type=int, default=1,
                     help="ignore n-grams seen fewer times in the window")
    top.add_argument("--on", type=_iso_date, help="only the window containing this day")

    series = sub.add_parser("series", parents=[common], help="per-window series for terms")
    series.add_argument("--terms", nargs="+", default=[], required=True,
                        help="n-grams, one argument each (words separated by spaces)")
    series.add_argument("--n", type=int, choices=(1, 2, 3),
                        help="arity (default: taken from the terms)")
    series.add_argument("--metric", choices=(OBSERVED, CHI), default=OBSERVED,
                        help="quantity drawn when --format svg")

    clusters = sub.add_parser("clusters", parents=[common], help="cluster shares per category")
    clusters.add_argument("--clusters", required=True, help="JSON file: name -> [terms]")
    clusters.add_argument("--count-mode", choices=COUNT_MODES, default="tokens")

    plot = sub.add_parser("plot", help="render a series table as SVG")
    plot.add_argument("--input", "-i", required=True, help="series CSV/TSV ('-' for stdin)")
    plot.add_argument("--metric", choices=(OBSERVED, CHI), default=OBSERVED)
    plot.add_argument("--title")
    plot.add_argument("--out", "-o", help="output file (default: stdout)")
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


@contextmanager
def _output(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        input=args.input,
        start=args.start,
        end=args.end,
        window_days=args.window_days,
        n=getattr(args, "n", None) or DEFAULT_N,
        k=getattr(args, "k", DEFAULT_TOP_K),
        mode=args.mode,
        stopwords=args.stopwords,
        use_stopwords=not args.no_stopwords,
        stem_rules=args.stem_rules,
        bridge_stopwords=args.bridge_stopwords,
        keep_numeric=args.keep_numeric,
        min_count=getattr(args, "min_count", 1),
        format=args.format,
        out=args.out,
        jobs=args.jobs,
    )


def build_pipeline(config: RunConfig) -> TextPipeline:
    if not config.use_stopwords:
        stopwords = StopWordList(frozenset(), source="none")
    elif config.stopwords:
        stopwords = read_stopwords(config.stopwords)
    else:
        stopwords = default_stopwords()
    rules = None
    if config.mode == "stem":
        rules = read_stem_rules(config.stem_rules) if config.stem_rules else default_stem_rules()
    return TextPipeline(
        stopwords=stopwords,
        stem_rules=rules,
        bridge_stopwords=config.bridge_stopwords,
        drop_numeric=not config.keep_numeric,
    )


def _load(config: RunConfig) -> Corpus:
    corpus = load_corpus(_read_text(config.input).split("\n"))
    if not len(corpus):
        raise AnalysisError("corpus is empty")
    return corpus


def _table(config: RunConfig, corpus: Corpus) -> FrequencyTable:
    partition = partition_windows(corpus, config.start, config.end, config.window_days)
    return count_frequencies(
        corpus, partition, config.n, config.mode, build_pipeline(config), workers=config.jobs
    )


def cmd_top(config: RunConfig, on: date | None = None) -> None:
    if config.format == "svg":
        raise UsageError("top has no svg output; use series or plot")
    table = _table(config, _load(config))
    if on is not None:
        window = table.partition.window_containing(on)
        rankings = [top_k(rank_window(table, window.index, config.min_count), config.k)]
    else:
        rankings = rank_all(table, config.k, config.min_count, workers=config.jobs)
    with _output(config.out) as out:
        write_rankings(rankings, table.partition, config.format, out, config.mode)


def parse_terms(terms: Sequence[str], config: RunConfig) -> list[tuple[str, ...]]:
    """Normalize user-given n-grams (stemmed in stem mode)."""
    if not terms:
        raise ParameterError("no terms given")
    pipeline = build_pipeline(config)
    grams = []
    for raw in terms:
        words = normalize(raw).split()
        if not words:
            raise ParameterError(f"term {raw!r} is empty after normalization")
        if pipeline.stem_rules is not None:
            words = [stem_word(w, pipeline.stem_rules) for w in words]
        grams.append(tuple(words))
    arities = {len(g) for g in grams}
    if len(arities) > 1:
        raise ParameterError("all terms must have the same number of words")
    return grams


def cmd_series(config: RunConfig, terms: Sequence[str], metric: str = OBSERVED,
               explicit_n: int | None = None) -> None:
    grams = parse_terms(terms, config)
    n = len(grams[0])
    if n > 3:
        raise ParameterError("terms may have at most 3 words")
    if explicit_n is not None and explicit_n != n:
        raise ParameterError(f"--n {explicit_n} does not match {n}-word terms")
    config = replace(config, n=n)
    table = _table(config, _load(config))
    series_table = SeriesTable.from_series([term_series(g, table) for g in grams], table.partition)
    with _output(config.out) as out:
        if config.format == "svg":
            out.write(render_svg(series_table, metric))
        else:
            write_series(series_table, config.format, out)


def cmd_clusters(config: RunConfig, cluster_path: str, count_mode: str = "tokens") -> None:
    if config.format == "svg":
        raise UsageError("clusters has no svg output")
    clusters = load_clusters(_read_text(cluster_path))
    corpus = _load(config)
    partition = partition_windows(corpus, config.start, config.end, config.window_days)
    docs = Corpus(tuple(d for d in corpus if partition.window_of(d.date) is not None))
    rules = None
    if config.mode == "stem":
        rules = read_stem_rules(config.stem_rules) if config.stem_rules else default_stem_rules()
    breakdowns = category_breakdowns(docs, clusters, count_mode, rules)
    with _output(config.out) as out:
        write_breakdowns(breakdowns, config.format, out)


def cmd_plot(path: str, metric: str = OBSERVED, title: str | None = None,
             out_path: str | None = None) -> None:
    text = _read_text(path)
    first = text.split("\n", 1)[0]
    table = read_series(text, "tsv" if "\t" in first else "csv")
    with _output(out_path) as out:
        out.write(render_svg(table, metric, title))


def run(args: argparse.Namespace) -> None:
    if args.command == "plot":
        cmd_plot(args.input, args.metric, args.title, args.out)
        return
    config = config_from_args(args)
    if args.command == "top":
        cmd_top(config, args.on)
    elif args.command == "series":
        cmd_series(config, args.terms, args.metric, args.n)
    elif args.command == "clusters":
        cmd_clusters(config, args.clusters, args.count_mode)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    try:
        run(args)
    except (UsageError, ParameterError, ClusterError) as exc:
        print(f"banglatrend: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IngestError, AnalysisError, OSError) as exc:
        print(f"banglatrend: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""N-gram extraction and per-window frequency tables."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .corpus import Corpus, Document, WindowPartition
from .errors import AnalysisError, ParameterError
from .text import ContentRun, TextPipeline

NGram = tuple[str, ...]

MODES = ("surface", "stem")


def check_arity(n: int) -> None:
    if n not in (1, 2, 3):
        raise ParameterError(f"n must be 1, 2 or 3, got {n}")


def check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}, got {mode!r}")


def ngram_text(gram: NGram) -> str:
    return " ".join(gram)


def sliding(terms: Sequence[str], n: int) -> list[NGram]:
    return [tuple(terms[i : i + n]) for i in range(len(terms) - n + 1)]


def extract_ngrams(run: ContentRun, n: int, mode: str = "surface") -> list[NGram]:
    """All consecutive n-term windows over a run, in order."""
    check_arity(n)
    return sliding(run.forms(mode), n)


def count_runs(runs: Iterable[ContentRun], n: int, mode: str = "surface") -> Counter:
    counts: Counter = Counter()
    for run in runs:
        counts.update(extract_ngrams(run, n, mode))
    return counts


@dataclass(frozen=True)
class FrequencyTable:
    """Window index (1-based) -> n-gram counts, plus corpus-wide totals."""

    partition: WindowPartition
    n: int
    mode: str
    window_counts: Mapping[int, Counter]
    totals: Counter

    @property
    def W(self) -> int:
        return self.partition.W

    def observed(self, gram: NGram, window: int) -> int:
        return self.window_counts[window].get(gram, 0)

    def total(self, gram: NGram) -> int:
        return self.totals.get(gram, 0)

    def counts(self, window: int) -> Counter:
        if window not in self.window_counts:
            raise ParameterError(f"no window {window}; table has {self.W}")
        return self.window_counts[window]


def _count_window(
    docs: list[Document], pipeline: TextPipeline, n: int, mode: str
) -> Counter:
    counts: Counter = Counter()
    for doc in docs:
        counts.update(count_runs(pipeline.runs(doc.text), n, mode))
    return counts


def count_frequencies(
    corpus: Corpus,
    partition: WindowPartition,
    n: int,
    mode: str = "surface",
    pipeline: TextPipeline | None = None,
    workers: int = 1,
) -> FrequencyTable:
    """Count n-grams for every window of ``partition``.

    Documents outside the partition range are ignored. ``workers > 1`` counts
    windows concurrently; the result is identical either way.
    """
    check_arity(n)
    check_mode(mode)
    if pipeline is None:
        pipeline = TextPipeline()
    if mode == "stem" and pipeline.stem_rules is None:
        raise ParameterError("stem mode needs a pipeline with stem rules")

    groups = partition.assign(corpus)
    if not any(groups.values()):
        raise AnalysisError("no documents in range")

    indices = sorted(groups)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda i: _count_window(groups[i], pipeline, n, mode), indices)
            )
    else:
        results = [_count_window(groups[i], pipeline, n, mode) for i in indices]

    window_counts = dict(zip(indices, results))
    totals: Counter = Counter()
    for i in indices:
        totals.update(window_counts[i])
    return FrequencyTable(partition, n, mode, window_counts, totals)

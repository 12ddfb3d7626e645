"""Chi-squared burst scores, ranking and per-term series.

A term's score in a window compares its count there against its average
count per window over the whole analysis range::

    expected = total / W
    chi      = (observed - expected) ** 2 / expected

Rankings sort by chi descending, then observed count descending, then the
n-gram tuple in code-point order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import DomainError, ParameterError, UndefinedScoreError
from .ngrams import FrequencyTable, NGram, ngram_text

DEFAULT_TOP_K = 5


def expected_frequency(total: int, W: int) -> float:
    if W < 1:
        raise ParameterError(f"window count must be >= 1, got {W}")
    if total <= 0:
        raise UndefinedScoreError("n-gram does not occur in the corpus")
    return total / W


def chi_square(observed: float, expected: float) -> float:
    if not expected > 0:
        raise DomainError(f"expected frequency must be positive, got {expected}")
    return (observed - expected) ** 2 / expected


@dataclass(frozen=True)
class TrendScore:
    ngram: NGram
    window: int
    observed: int
    expected: float
    chi: float

    @property
    def text(self) -> str:
        return ngram_text(self.ngram)

    def sort_key(self) -> tuple:
        return (-self.chi, -self.observed, self.ngram)


@dataclass(frozen=True)
class TrendRanking:
    window: int
    n: int
    entries: tuple[TrendScore, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def rank_scores(scores) -> list[TrendScore]:
    return sorted(scores, key=TrendScore.sort_key)


def rank_window(
    table: FrequencyTable, window: int, min_observed: int = 1
) -> TrendRanking:
    """Score and order every n-gram seen in ``window``.

    N-grams with fewer than ``min_observed`` occurrences in the window are left
    out. An empty window gives an empty ranking.
    """
    if min_observed < 1:
        raise ParameterError("min_observed must be >= 1")
    W = table.W
    scores = []
    for gram, observed in table.counts(window).items():
        if observed < min_observed:
            continue
        expected = expected_frequency(table.totals[gram], W)
        scores.append(
            TrendScore(gram, window, observed, expected, chi_square(observed, expected))
        )
    return TrendRanking(window, table.n, tuple(rank_scores(scores)))


def top_k(ranking: TrendRanking, k: int = DEFAULT_TOP_K) -> TrendRanking:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    return TrendRanking(ranking.window, ranking.n, ranking.entries[:k])


def rank_all(
    table: FrequencyTable,
    k: int | None = DEFAULT_TOP_K,
    min_observed: int = 1,
    workers: int = 1,
) -> list[TrendRanking]:
    """Rankings for every window, in window order. ``k=None`` keeps all."""

    def one(window: int) -> TrendRanking:
        ranking = rank_window(table, window, min_observed)
        return ranking if k is None else top_k(ranking, k)

    indices = [w.index for w in table.partition]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, indices))
    return [one(i) for i in indices]


@dataclass(frozen=True)
class SeriesPoint:
    window: int
    observed: int
    chi: float | None


@dataclass(frozen=True)
class TermSeries:
    ngram: NGram
    points: tuple[SeriesPoint, ...]
    absent: bool = False

    @property
    def text(self) -> str:
        return ngram_text(self.ngram)

    @property
    def total(self) -> int:
        return sum(p.observed for p in self.points)


def term_series(gram: NGram, table: FrequencyTable) -> TermSeries:
    """Observed count and chi for ``gram`` in every window, zero-filled.

    An n-gram that never occurs gets an all-zero series with ``absent`` set and
    no chi values.
    """
    if len(gram) != table.n:
        raise ParameterError(
            f"{ngram_text(gram)!r} has {len(gram)} terms; table counts {table.n}-grams"
        )
    total = table.total(gram)
    indices = [w.index for w in table.partition]
    if total == 0:
        points = tuple(SeriesPoint(i, 0, None) for i in indices)
        return TermSeries(gram, points, absent=True)
    expected = expected_frequency(total, table.W)
    points = []
    for i in indices:
        observed = table.observed(gram, i)
        points.append(SeriesPoint(i, observed, chi_square(observed, expected)))
    return TermSeries(gram, tuple(points))

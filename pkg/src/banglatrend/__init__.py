"""Trending-topic detection for date-stamped Bengali news corpora.

Documents are bucketed into fixed-width date windows, n-grams are counted per
window, and each n-gram is scored in each window by how far its count departs
from its average count per window.
"""

__version__ = "0.1.0"

from .clusters import (
    CategoryBreakdown,
    KeywordCluster,
    category_breakdowns,
    category_share,
    cluster_mentions,
    load_clusters,
)
from .corpus import (
    Corpus,
    Document,
    Window,
    WindowPartition,
    load_corpus,
    parse_document,
    partition_windows,
)
from .ngrams import FrequencyTable, NGram, count_frequencies, extract_ngrams
from .scoring import (
    TermSeries,
    TrendRanking,
    TrendScore,
    chi_square,
    expected_frequency,
    rank_all,
    rank_window,
    term_series,
    top_k,
)
from .text import (
    ContentRun,
    StemRuleSet,
    StopWordList,
    TextPipeline,
    Token,
    default_stem_rules,
    default_stopwords,
    filter_stopwords,
    load_stem_rules,
    load_stopwords,
    normalize,
    stem,
    tokenize,
)

__all__ = [
    "CategoryBreakdown",
    "KeywordCluster",
    "category_breakdowns",
    "category_share",
    "cluster_mentions",
    "load_clusters",
    "Corpus",
    "Document",
    "Window",
    "WindowPartition",
    "load_corpus",
    "parse_document",
    "partition_windows",
    "FrequencyTable",
    "NGram",
    "count_frequencies",
    "extract_ngrams",
    "TermSeries",
    "TrendRanking",
    "TrendScore",
    "chi_square",
    "expected_frequency",
    "rank_all",
    "rank_window",
    "term_series",
    "top_k",
    "ContentRun",
    "StemRuleSet",
    "StopWordList",
    "TextPipeline",
    "Token",
    "default_stem_rules",
    "default_stopwords",
    "filter_stopwords",
    "load_stem_rules",
    "load_stopwords",
    "normalize",
    "stem",
    "tokenize",
]

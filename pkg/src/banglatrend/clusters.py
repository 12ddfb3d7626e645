"""Hand-made keyword clusters and their mention shares per news category."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .corpus import Corpus
from .errors import ClusterConflictError, ClusterValidationError, ParameterError
from .text import StemRuleSet, normalize, split_sentences, stem_word, tokenize

UNCATEGORIZED = "uncategorized"
COUNT_MODES = ("tokens", "documents")


@dataclass(frozen=True)
class KeywordCluster:
    name: str
    members: frozenset[str]

    def __len__(self) -> int:
        return len(self.members)


def make_clusters(spec: Mapping[str, Iterable[str]]) -> list[KeywordCluster]:
    """Build validated clusters from ``name -> terms``.

    Terms are normalized. A cluster may not be empty, a term must be a single
    word, and no term may belong to two clusters.
    """
    clusters: list[KeywordCluster] = []
    owner: dict[str, str] = {}
    for name, terms in spec.items():
        if isinstance(terms, str) or not isinstance(terms, Iterable):
            raise ClusterValidationError(f"cluster {name!r} must be a list of strings")
        members = set()
        for raw in terms:
            if not isinstance(raw, str):
                raise ClusterValidationError(f"cluster {name!r} has a non-string member")
            term = normalize(raw)
            if not term:
                raise ClusterValidationError(f"cluster {name!r} has an empty member")
            if " " in term:
                raise ClusterValidationError(
                    f"cluster member {term!r} in {name!r} is not a single word"
                )
            if term in owner and owner[term] != name:
                raise ClusterConflictError(term, owner[term], name)
            owner[term] = name
            members.add(term)
        if not members:
            raise ClusterValidationError(f"cluster {name!r} is empty")
        clusters.append(KeywordCluster(name, frozenset(members)))
    return clusters


def load_clusters(source: str) -> list[KeywordCluster]:
    """Parse a JSON object mapping cluster name to an array of terms."""
    try:
        spec = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ClusterValidationError(f"cluster file is not valid JSON: {exc.msg}") from None
    if not isinstance(spec, dict):
        raise ClusterValidationError("cluster file must hold a JSON object")
    return make_clusters(spec)


def _words(text: str) -> list[str]:
    return [t.surface for s in split_sentences(text) for t in tokenize(normalize(s))]


def cluster_mentions(
    corpus: Corpus | Iterable,
    clusters: list[KeywordCluster],
    category: str | None = None,
    count_mode: str = "tokens",
    stem_rules: StemRuleSet | None = None,
) -> dict[str, int]:
    """Mentions per cluster over the documents labelled ``category``.

    ``category=None`` counts every document. In ``tokens`` mode each
    occurrence counts; in ``documents`` mode a document counts once per cluster
    it mentions. Passing ``stem_rules`` also matches a word whose stem is a
    member.
    """
    if count_mode not in COUNT_MODES:
        raise ParameterError(f"count mode must be one of {COUNT_MODES}")
    owner = {term: c.name for c in clusters for term in c.members}
    counts = {c.name: 0 for c in clusters}
    for doc in corpus:
        if category is not None and doc.category != category:
            continue
        hits: Counter = Counter()
        for word in _words(doc.text):
            name = owner.get(word)
            if name is None and stem_rules is not None:
                name = owner.get(stem_word(word, stem_rules))
            if name is not None:
                hits[name] += 1
        for name, c in hits.items():
            counts[name] += c if count_mode == "tokens" else 1
    return counts


@dataclass(frozen=True)
class CategoryBreakdown:
    category: str
    counts: dict[str, int]
    shares: dict[str, float] | None  # None when nothing was mentioned

    @property
    def no_data(self) -> bool:
        return self.shares is None

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def category_share(counts: Mapping[str, int], category: str = "all") -> CategoryBreakdown:
    """Percentage of all mentions that fall in each cluster."""
    if not counts:
        raise ParameterError("need at least one cluster")
    if any(c < 0 for c in counts.values()):
        raise ParameterError("counts must be non-negative")
    total = sum(counts.values())
    if total == 0:
        return CategoryBreakdown(category, dict(counts), None)
    shares = {name: 100.0 * c / total for name, c in counts.items()}
    return CategoryBreakdown(category, dict(counts), shares)


def category_breakdowns(
    corpus: Corpus,
    clusters: list[KeywordCluster],
    count_mode: str = "tokens",
    stem_rules: StemRuleSet | None = None,
) -> list[CategoryBreakdown]:
    """One breakdown per category label, sorted; unlabelled documents last."""
    labels = sorted({d.category for d in corpus if d.category is not None})
    out = []
    for label in labels:
        docs = [d for d in corpus if d.category == label]
        counts = cluster_mentions(docs, clusters, None, count_mode, stem_rules)
        out.append(category_share(counts, label))
    unlabelled = [d for d in corpus if d.category is None]
    if unlabelled:
        counts = cluster_mentions(unlabelled, clusters, None, count_mode, stem_rules)
        out.append(category_share(counts, UNCATEGORIZED))
    return out

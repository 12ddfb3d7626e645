"""Brute-force reference counter for n-gram tables.

Works from the *structured* form of a generated corpus (documents as lists of
sentences of words) so it shares no tokenizer or filtering code with the
library. Every (document, sentence, position) triple is materialized and
checked on its own.
"""

from __future__ import annotations

import random
from collections import Counter
from datetime import date, timedelta

STOP = ["ও", "এবং", "কিন্তু", "যে", "না"]
CONTENT = ["মহান", "স্বাধীনতা", "দিবস", "তদন্ত", "সংস্থা", "বাংলা", "বাস", "নারী", "মা", "ফুল"]
NUMERIC = ["১০", "২০১০"]
VOCAB = STOP + CONTENT + NUMERIC
JOINERS = [" ", "  ", ", ", " - ", "\n"]
ENDERS = ["। ", "! ", "? ", "॥ "]


def random_corpus(rng: random.Random, start: date, days: int, max_docs: int = 20,
                  max_tokens: int = 50):
    """Return [(id, date, sentences)] plus the rendered text of each document."""
    docs = []
    for k in range(rng.randint(1, max_docs)):
        day = start + timedelta(days=rng.randint(-3, days + 3))
        budget = rng.randint(1, max_tokens)
        sentences = []
        while budget > 0:
            m = min(budget, rng.randint(1, 12))
            sentences.append([rng.choice(VOCAB) for _ in range(m)])
            budget -= m
        text = ""
        for s in sentences:
            words = s[0]
            for w in s[1:]:
                words += rng.choice(JOINERS) + w
            text += words + rng.choice(ENDERS)
        docs.append((f"doc{k}", day, sentences, text))
    return docs


def window_index(day: date, start: date, end: date, window_days: int) -> int | None:
    index, first = 1, start
    while first <= end:
        last = min(first + timedelta(days=window_days - 1), end)
        if first <= day <= last:
            return index
        first = last + timedelta(days=1)
        index += 1
    return None


def oracle_counts(docs, start, end, window_days, n, stopwords=frozenset(),
                  drop_numeric=True, bridge=False):
    """window index -> Counter of n-gram tuples."""
    counts: dict[int, Counter] = {}
    for _id, day, sentences, _text in docs:
        w = window_index(day, start, end, window_days)
        if w is None:
            continue
        for sentence in sentences:
            def dropped(word):
                return word in stopwords or (drop_numeric and word in NUMERIC)

            seq = [x for x in sentence if not dropped(x)] if bridge else sentence
            for i in range(len(seq)):
                if i + n > len(seq):
                    break
                gram = tuple(seq[i : i + n])
                if any(dropped(x) for x in gram):
                    continue
                counts.setdefault(w, Counter())[gram] += 1
    return counts

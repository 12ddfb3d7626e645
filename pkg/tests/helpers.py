"""Synthetic corpora with a prescribed per-window occurrence profile."""

from __future__ import annotations

import json
from datetime import date, timedelta

from banglatrend.corpus import Corpus, Document

START = date(2010, 1, 1)
END = date(2010, 4, 30)
WINDOW_DAYS = 7
W = 18

# (topic, count in the target window, corpus total)
BIGRAM_WEEK = [
    ("মহান স্বাধীনতা", 29, 42),
    ("স্বাধীনতা দিবস", 34, 59),
    ("তদন্ত সংস্থা", 27, 41),
    ("স্বাধীন বাংলা", 27, 45),
    ("বিআরটিসির বাস", 12, 12),
]
BIGRAM_WEEK_CHI = [
    304.76190476190476,
    287.95574387947266,
    268.32655826558266,
    240.1,
    192.66666666666669,
]
BIGRAM_WEEK_DAY = date(2010, 3, 28)

TRIGRAM_WEEK = [
    ("শহীদ মিনারে ফুল", 30, 33),
    ("আন্তর্জাতিক মাতৃভাষা দিবস", 32, 45),
    ("শহীদ মিনারে পুষ্পার্ঘ্য", 15, 17),
    ("বিমানবন্দরের নাম পরিবর্তন", 14, 17),
    ("মাতৃভাষা দিবস উপলক্ষে", 15, 20),
]
TRIGRAM_WEEK_CHI = [
    432.7424242424243,
    348.1,
    209.1797385620915,
    180.4738562091503,
    173.61111111111111,
]
TRIGRAM_WEEK_DAY = date(2010, 2, 21)

WOMEN = ["নারী", "নারীশিক্ষা", "নারীবাদ", "নারীত্ব", "মহিলা", "মেয়ে", "কন্যা", "বালিকা", "স্ত্রী", "মা"]


def window_first_days(start: date = START, end: date = END, days: int = WINDOW_DAYS) -> list[date]:
    out, d = [], start
    while d <= end:
        out.append(d)
        d += timedelta(days=days)
    return out


def reconstruction_corpus(rows, target_day: date) -> Corpus:
    """Each topic occurs ``observed`` times on ``target_day`` and the rest of
    its total is dealt round-robin over the other windows' first days.

    Every occurrence is its own sentence, so no n-gram other than the topics
    themselves (and their sub-grams) is formed.
    """
    firsts = window_first_days()
    target = max(i for i, d in enumerate(firsts) if d <= target_day)
    others = [d for i, d in enumerate(firsts) if i != target]
    per_day: dict[date, list[str]] = {}
    for topic, observed, total in rows:
        per_day.setdefault(target_day, []).extend([topic] * observed)
        for j in range(total - observed):
            per_day.setdefault(others[j % len(others)], []).append(topic)
    docs = []
    for k, day in enumerate(sorted(per_day)):
        body = "। ".join(per_day[day]) + "।"
        docs.append(Document(id=f"d{k}", date=day, body=body))
    return Corpus(tuple(docs))


def to_jsonl(corpus: Corpus) -> str:
    lines = []
    for d in corpus:
        obj = {"id": d.id, "date": d.date.isoformat(), "body": d.body}
        if d.category is not None:
            obj["category"] = d.category
        if d.title is not None:
            obj["title"] = d.title
        lines.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(lines) + "\n"

"""Loading date-stamped news documents and cutting the date axis into windows."""

from __future__ import annotations

import json
import re
from bisect import bisect_right
from dataclasses import dataclass, field
from datetime import date, timedelta
from typing import Iterable, Iterator

from .errors import DateError, DuplicateIdError, ParameterError, ParseError, RangeError

DEFAULT_WINDOW_DAYS = 7

_ISO_DAY = re.compile(r"\d{4}-\d{2}-\d{2}")

# Joins title and body; a danda so that no n-gram spans the headline.
TITLE_SEPARATOR = "। "


@dataclass(frozen=True)
class Document:
    id: str
    date: date
    body: str
    category: str | None = None
    title: str | None = None

    @property
    def text(self) -> str:
        if self.title and self.title.strip():
            return self.title + TITLE_SEPARATOR + self.body
        return self.body


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for doc in self.documents:
            if doc.id in seen:
                raise DuplicateIdError(doc.id)
            seen.add(doc.id)

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    @property
    def date_range(self) -> tuple[date, date] | None:
        if not self.documents:
            return None
        days = [d.date for d in self.documents]
        return min(days), max(days)

    def categories(self) -> list[str | None]:
        """Distinct category labels in first-seen order."""
        return list(dict.fromkeys(d.category for d in self.documents))


def parse_date(value: object, line_no: int | None = None) -> date:
    if not isinstance(value, str) or not _ISO_DAY.fullmatch(value):
        raise DateError(f"invalid date: {value!r} (expected YYYY-MM-DD)", line_no)
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise DateError(f"invalid date: {value!r}", line_no) from None


def _optional_str(obj: dict, key: str, line_no: int | None) -> str | None:
    value = obj.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise ParseError(f"field {key!r} must be a string", line_no)
    return value


def parse_document(line: str, line_no: int | None = None) -> Document:
    """Parse one JSONL record. Unknown keys are ignored."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line_no) from None
    if not isinstance(obj, dict):
        raise ParseError("record is not a JSON object", line_no)

    for key in ("id", "date", "body"):
        if key not in obj or obj[key] is None:
            raise ParseError(f"missing field: {key}", line_no)

    doc_id = obj["id"]
    if not isinstance(doc_id, str) or not doc_id:
        raise ParseError("field 'id' must be a non-empty string", line_no)
    body = obj["body"]
    if not isinstance(body, str) or not body.strip():
        raise ParseError("field 'body' is empty", line_no)

    category = _optional_str(obj, "category", line_no)
    if category is not None and "\t" in category:
        raise ParseError("category may not contain tabs", line_no)

    return Document(
        id=doc_id,
        date=parse_date(obj["date"], line_no),
        body=body,
        category=category,
        title=_optional_str(obj, "title", line_no),
    )


def load_corpus(lines: Iterable[str]) -> Corpus:
    """Read a JSONL stream. Blank lines are skipped; line numbers are 1-based."""
    docs: list[Document] = []
    first_seen: dict[str, int] = {}
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        doc = parse_document(line, line_no)
        if doc.id in first_seen:
            raise DuplicateIdError(doc.id, first_seen[doc.id], line_no)
        first_seen[doc.id] = line_no
        docs.append(doc)
    return Corpus(tuple(docs))


@dataclass(frozen=True)
class Window:
    index: int  # 1-based
    first_day: date
    last_day: date

    @property
    def days(self) -> int:
        return (self.last_day - self.first_day).days + 1

    def __contains__(self, day: date) -> bool:
        return self.first_day <= day <= self.last_day


@dataclass(frozen=True)
class WindowPartition:
    start: date
    end: date
    window_days: int = DEFAULT_WINDOW_DAYS
    windows: tuple[Window, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.window_days < 1:
            raise ParameterError(f"window_days must be >= 1, got {self.window_days}")
        if self.start > self.end:
            raise RangeError(f"start {self.start} is after end {self.end}")
        if not self.windows:
            object.__setattr__(self, "windows", tuple(self._build()))

    def _build(self) -> Iterator[Window]:
        step = timedelta(days=self.window_days)
        first, index = self.start, 1
        while first <= self.end:
            last = min(first + step - timedelta(days=1), self.end)
            yield Window(index, first, last)
            first += step
            index += 1

    @property
    def W(self) -> int:
        return len(self.windows)

    def __len__(self) -> int:
        return len(self.windows)

    def __iter__(self) -> Iterator[Window]:
        return iter(self.windows)

    def window(self, index: int) -> Window:
        if not 1 <= index <= len(self.windows):
            raise ParameterError(f"no window {index}; partition has {len(self.windows)}")
        return self.windows[index - 1]

    def window_of(self, day: date) -> int | None:
        """Index of the window holding ``day``, or None if out of range."""
        if not self.start <= day <= self.end:
            return None
        return (day - self.start).days // self.window_days + 1

    def window_containing(self, day: date) -> Window:
        index = self.window_of(day)
        if index is None:
            raise RangeError(f"{day} is outside {self.start}..{self.end}")
        return self.windows[index - 1]

    def assign(self, corpus: Corpus) -> dict[int, list[Document]]:
        """Group in-range documents by window index; every window gets a key."""
        groups: dict[int, list[Document]] = {w.index: [] for w in self.windows}
        firsts = [w.first_day for w in self.windows]
        for doc in corpus:
            if self.start <= doc.date <= self.end:
                groups[bisect_right(firsts, doc.date)].append(doc)
        return groups


def partition_windows(
    corpus: Corpus | None,
    start: date | None = None,
    end: date | None = None,
    window_days: int = DEFAULT_WINDOW_DAYS,
) -> WindowPartition:
    """Fixed-width windows anchored at ``start``.

    ``start``/``end`` default to the corpus date range. The final window is
    truncated at ``end`` when the range is not a multiple of ``window_days``.
    """
    if start is None or end is None:
        span = corpus.date_range if corpus is not None else None
        if span is None:
            raise RangeError("no date range given and corpus is empty")
        start = span[0] if start is None else start
        end = span[1] if end is None else end
    return WindowPartition(start, end, window_days)

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from datetime import date

from .corpus import DEFAULT_WINDOW_DAYS
from .errors import ParameterError
from .ngrams import check_arity, check_mode
from .scoring import DEFAULT_TOP_K

DEFAULT_N = 3
OUTPUT_FORMATS = ("tsv", "csv", "json", "svg")


@dataclass(frozen=True)
class RunConfig:
    """Everything one analysis run depends on.

    Only ``input`` is needed; a missing date range falls back to the corpus
    span. ``stopwords``/``stem_rules`` of None mean the bundled lists;
    ``use_stopwords=False`` disables filtering.
    """

    input: str
    start: date | None = None
    end: date | None = None
    window_days: int = DEFAULT_WINDOW_DAYS
    n: int = DEFAULT_N
    k: int = DEFAULT_TOP_K
    mode: str = "surface"
    stopwords: str | None = None
    use_stopwords: bool = True
    stem_rules: str | None = None
    bridge_stopwords: bool = False
    keep_numeric: bool = False
    min_count: int = 1
    format: str = "tsv"
    out: str | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        check_arity(self.n)
        check_mode(self.mode)
        if self.window_days < 1:
            raise ParameterError("window_days must be >= 1")
        if self.k < 1:
            raise ParameterError("k must be >= 1")
        if self.min_count < 1:
            raise ParameterError("min_count must be >= 1")
        if self.jobs < 1:
            raise ParameterError("jobs must be >= 1")
        if self.format not in OUTPUT_FORMATS:
            raise ParameterError(f"format must be one of {OUTPUT_FORMATS}")

    def to_json(self) -> str:
        data = asdict(self)
        for key in ("start", "end"):
            if data[key] is not None:
                data[key] = data[key].isoformat()
        return json.dumps(data, ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RunConfig:
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown config keys: {sorted(unknown)}")
        for key in ("start", "end"):
            if data.get(key) is not None:
                data[key] = date.fromisoformat(data[key])
        return cls(**data)

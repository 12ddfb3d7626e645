"""Bengali normalization, tokenization, stop-word filtering and stemming.

The pipeline for one document is::

    raw text -> sentences -> normalize -> tokenize -> stem? -> content runs

A content run is a maximal stretch of adjacent kept tokens inside one
sentence. N-grams are only ever formed inside a run.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ParameterError

ZWNJ = "‌"
ZWJ = "‍"
DANDA = "।"
DOUBLE_DANDA = "॥"

SENTENCE_END = DANDA + DOUBLE_DANDA + ".!?…"
_SENTENCE_SPLIT = re.compile("[" + re.escape(SENTENCE_END) + "]")


def _is_separator(ch: str) -> bool:
    cat = unicodedata.category(ch)
    # Punctuation, symbols, separators (Z*) and controls (Cc).
    return cat[0] in "PSZ" or cat == "Cc" or ch.isspace()


def _drop(ch: str) -> bool:
    # Format characters: ZWJ/ZWNJ, BOM, soft hyphen, word joiner...
    return unicodedata.category(ch) == "Cf"


def normalize(text: str) -> str:
    """Canonical composed form with punctuation mapped to single spaces.

    Zero-width (non-)joiners and other format characters are removed.
    Idempotent.
    """
    text = unicodedata.normalize("NFC", text)
    chars = []
    for ch in text:
        if _drop(ch):
            continue
        chars.append(" " if _is_separator(ch) else ch)
    # Removing format characters can bring a base and a vowel sign together.
    text = unicodedata.normalize("NFC", "".join(chars))
    return " ".join(text.split())


def split_sentences(text: str) -> list[str]:
    """Split raw text at sentence-ending marks (danda, '.', '!', '?', ellipsis)."""
    return [s for s in _SENTENCE_SPLIT.split(text) if s.strip()]


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str | None = None

    def form(self, mode: str = "surface") -> str:
        if mode == "stem":
            return self.stem if self.stem is not None else self.surface
        return self.surface


def tokenize(text: str) -> list[Token]:
    """Split normalized text into tokens, in order."""
    return [Token(part) for part in text.split()]


def is_numeric(word: str) -> bool:
    """True for Bengali or ASCII digit strings (``str.isdecimal`` semantics)."""
    return word.isdecimal()


# -- stop words -------------------------------------------------------------


@dataclass(frozen=True)
class StopWordList:
    entries: frozenset[str] = frozenset()
    source: str = "bundled"

    def __post_init__(self) -> None:
        entries = frozenset(w for w in map(normalize, self.entries) if w)
        object.__setattr__(self, "entries", entries)

    def __contains__(self, word: object) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def _clean_lines(lines: Iterable[str]) -> Iterable[str]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def load_stopwords(lines: Iterable[str], source: str = "<stream>") -> StopWordList:
    """One word per line; ``#`` starts a comment line. Entries are normalized."""
    entries = set()
    for line in _clean_lines(lines):
        word = normalize(line)
        if word:
            entries.add(word)
    return StopWordList(frozenset(entries), source)


def read_stopwords(path: str | Path) -> StopWordList:
    with open(path, encoding="utf-8") as fh:
        return load_stopwords(fh, source=str(path))


@lru_cache(maxsize=None)
def default_stopwords() -> StopWordList:
    """The bundled Bengali list (about 500 words)."""
    text = resources.files(__package__).joinpath("data/stopwords_bn.txt").read_text(
        encoding="utf-8"
    )
    return load_stopwords(text.splitlines(), source="bundled")


# -- content runs -----------------------------------------------------------


class Boundary(str, Enum):
    STOP_WORD = "stop_word"
    NUMERIC = "numeric"
    SENTENCE = "sentence"
    END = "end"


@dataclass(frozen=True)
class ContentRun:
    tokens: tuple[Token, ...]
    boundary: Boundary = Boundary.END

    def __len__(self) -> int:
        return len(self.tokens)

    def forms(self, mode: str = "surface") -> list[str]:
        return [t.form(mode) for t in self.tokens]


def filter_stopwords(
    tokens: Sequence[Token],
    stopwords: StopWordList,
    *,
    bridge: bool = False,
    drop_numeric: bool = False,
    end: Boundary = Boundary.END,
) -> list[ContentRun]:
    """Remove stop words, splitting the token stream where one was removed.

    With ``bridge=True`` removed words do not break adjacency. Purely numeric
    tokens are removed the same way when ``drop_numeric`` is set. ``end`` is
    the boundary recorded on the final run.
    """
    runs: list[ContentRun] = []
    current: list[Token] = []
    for tok in tokens:
        if tok.surface in stopwords:
            reason = Boundary.STOP_WORD
        elif drop_numeric and is_numeric(tok.surface):
            reason = Boundary.NUMERIC
        else:
            current.append(tok)
            continue
        if current and not bridge:
            runs.append(ContentRun(tuple(current), reason))
            current = []
    if current:
        runs.append(ContentRun(tuple(current), end))
    return runs


# -- stemming ---------------------------------------------------------------


@dataclass(frozen=True)
class StemRuleSet:
    """Suffix rules, longest suffix first. ``min_stem`` is in code points."""

    suffixes: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        cleaned = []
        for suffix, min_stem in self.suffixes:
            suffix = normalize(suffix)
            if not suffix or " " in suffix:
                raise ParameterError(f"invalid stem suffix {suffix!r}")
            if min_stem < 1:
                raise ParameterError(f"min stem length must be >= 1 for {suffix!r}")
            cleaned.append((suffix, int(min_stem)))
        # sort is stable: equal-length suffixes keep file order
        cleaned.sort(key=lambda rule: -len(rule[0]))
        object.__setattr__(self, "suffixes", tuple(cleaned))


def load_stem_rules(lines: Iterable[str]) -> StemRuleSet:
    """Lines of ``suffix<TAB>min_stem_len``; ``#`` comments allowed."""
    rules = []
    for line in _clean_lines(lines):
        suffix, sep, min_len = line.partition("\t")
        if not sep:
            raise ParameterError(f"stem rule needs a tab-separated length: {line!r}")
        try:
            rules.append((suffix.strip(), int(min_len)))
        except ValueError:
            raise ParameterError(f"bad min stem length in {line!r}") from None
    return StemRuleSet(tuple(rules))


def read_stem_rules(path: str | Path) -> StemRuleSet:
    with open(path, encoding="utf-8") as fh:
        return load_stem_rules(fh)


@lru_cache(maxsize=None)
def default_stem_rules() -> StemRuleSet:
    text = resources.files(__package__).joinpath("data/stem_rules_bn.tsv").read_text(
        encoding="utf-8"
    )
    return load_stem_rules(text.splitlines())


def stem_word(word: str, rules: StemRuleSet) -> str:
    for suffix, min_stem in rules.suffixes:
        if word.endswith(suffix) and len(word) - len(suffix) >= min_stem:
            return word[: -len(suffix)]
    return word


def stem(token: Token, rules: StemRuleSet) -> Token:
    """Strip the longest matching suffix once; stem = surface if none applies."""
    return replace(token, stem=stem_word(token.surface, rules))


# -- whole-document pipeline ------------------------------------------------


@dataclass(frozen=True)
class TextPipeline:
    """Settings that turn document text into content runs."""

    stopwords: StopWordList = field(default_factory=StopWordList)
    stem_rules: StemRuleSet | None = None
    bridge_stopwords: bool = False
    drop_numeric: bool = True

    def tokens(self, sentence: str) -> list[Token]:
        tokens = tokenize(normalize(sentence))
        if self.stem_rules is not None:
            tokens = [stem(t, self.stem_rules) for t in tokens]
        return tokens

    def runs(self, text: str) -> list[ContentRun]:
        sentences = split_sentences(text)
        runs: list[ContentRun] = []
        for i, sentence in enumerate(sentences):
            last = i == len(sentences) - 1
            runs.extend(
                filter_stopwords(
                    self.tokens(sentence),
                    self.stopwords,
                    bridge=self.bridge_stopwords,
                    drop_numeric=self.drop_numeric,
                    end=Boundary.END if last else Boundary.SENTENCE,
                )
            )
        return runs

"""Report writers (TSV, CSV, JSON) and the series table behind the plots.

Floats are written with ``repr`` so every chi value is the shortest decimal
that reads back as the same double.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .clusters import CategoryBreakdown
from .corpus import WindowPartition
from .errors import ParameterError
from .scoring import TermSeries, TrendRanking

FORMATS = ("tsv", "csv", "json")


def fmt_float(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def _check_tsv_field(value: str) -> str:
    if "\t" in value or "\n" in value:
        raise ParameterError(f"value {value!r} cannot be written as TSV")
    return value


def _write_rows(rows: Iterable[Sequence[object]], fmt: str, out: IO[str]) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(rows)
    else:
        for row in rows:
            out.write("\t".join(_check_tsv_field(str(v)) for v in row) + "\n")


# -- rankings ---------------------------------------------------------------


def rankings_to_dict(
    rankings: Sequence[TrendRanking], partition: WindowPartition, mode: str = "surface"
) -> dict:
    windows = []
    for ranking in rankings:
        w = partition.window(ranking.window)
        windows.append(
            {
                "window": w.index,
                "first_day": w.first_day.isoformat(),
                "last_day": w.last_day.isoformat(),
                "entries": [
                    {
                        "rank": rank,
                        "ngram": list(s.ngram),
                        "text": s.text,
                        "chi": s.chi,
                        "observed": s.observed,
                        "expected": s.expected,
                    }
                    for rank, s in enumerate(ranking.entries, start=1)
                ],
            }
        )
    n = rankings[0].n if rankings else None
    return {"n": n, "mode": mode, "W": partition.W, "windows": windows}


def write_rankings(
    rankings: Sequence[TrendRanking],
    partition: WindowPartition,
    fmt: str,
    out: IO[str],
    mode: str = "surface",
) -> None:
    """Write one block per window.

    TSV: a ``window`` header line per window followed by its
    ``rank, n-gram, chi, observed`` rows, blocks separated by a blank line.
    CSV: flat rows; an empty window still gets one row with blank rank fields.
    """
    if fmt == "json":
        json.dump(rankings_to_dict(rankings, partition, mode), out, ensure_ascii=False, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        rows: list[list[object]] = [
            ["window", "first_day", "last_day", "rank", "ngram", "chi", "observed"]
        ]
        for ranking in rankings:
            w = partition.window(ranking.window)
            head = [w.index, w.first_day.isoformat(), w.last_day.isoformat()]
            if not ranking.entries:
                rows.append(head + ["", "", "", ""])
            for rank, s in enumerate(ranking.entries, start=1):
                rows.append(head + [rank, s.text, fmt_float(s.chi), s.observed])
        _write_rows(rows, "csv", out)
        return
    if fmt != "tsv":
        raise ParameterError(f"unsupported format {fmt!r} for rankings")
    for i, ranking in enumerate(rankings):
        w = partition.window(ranking.window)
        if i:
            out.write("\n")
        rows = [["window", w.index, w.first_day.isoformat(), w.last_day.isoformat()]]
        rows += [
            [rank, s.text, fmt_float(s.chi), s.observed]
            for rank, s in enumerate(ranking.entries, start=1)
        ]
        _write_rows(rows, "tsv", out)


# -- term series ------------------------------------------------------------

OBSERVED = "observed"
CHI = "chi"
ABSENT = "absent"


@dataclass(frozen=True)
class SeriesColumn:
    name: str
    observed: tuple[int, ...]
    chi: tuple[float | None, ...]
    absent: bool = False


@dataclass(frozen=True)
class SeriesTable:
    """Per-window values for a set of terms; rows are windows."""

    window_starts: tuple[str, ...]
    columns: tuple[SeriesColumn, ...]

    def __post_init__(self) -> None:
        for col in self.columns:
            if len(col.observed) != len(self.window_starts) or len(col.chi) != len(
                self.window_starts
            ):
                raise ParameterError(f"column {col.name!r} does not match window count")

    @classmethod
    def from_series(
        cls, series: Sequence[TermSeries], partition: WindowPartition
    ) -> SeriesTable:
        starts = tuple(w.first_day.isoformat() for w in partition)
        cols = tuple(
            SeriesColumn(
                s.text,
                tuple(p.observed for p in s.points),
                tuple(p.chi for p in s.points),
                s.absent,
            )
            for s in series
        )
        return cls(starts, cols)

    def header(self) -> list[str]:
        head = ["window_start"]
        for col in self.columns:
            obs = f"{col.name}|{OBSERVED}" + (f"|{ABSENT}" if col.absent else "")
            head += [obs, f"{col.name}|{CHI}"]
        return head

    def rows(self) -> list[list[str]]:
        out = []
        for i, start in enumerate(self.window_starts):
            row = [start]
            for col in self.columns:
                row += [str(col.observed[i]), fmt_float(col.chi[i])]
            out.append(row)
        return out

    def values(self, metric: str = OBSERVED) -> list[tuple[str, list[float]]]:
        if metric not in (OBSERVED, CHI):
            raise ParameterError(f"metric must be {OBSERVED!r} or {CHI!r}")
        if metric == OBSERVED:
            return [(c.name, [float(v) for v in c.observed]) for c in self.columns]
        return [(c.name, [0.0 if v is None else v for v in c.chi]) for c in self.columns]

    def to_dict(self) -> dict:
        return {
            "window_starts": list(self.window_starts),
            "series": [
                {
                    "text": c.name,
                    "ngram": c.name.split(" "),
                    "absent": c.absent,
                    "observed": list(c.observed),
                    "chi": list(c.chi),
                }
                for c in self.columns
            ],
        }


def write_series(table: SeriesTable, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        json.dump(table.to_dict(), out, ensure_ascii=False, indent=2)
        out.write("\n")
    elif fmt in ("csv", "tsv"):
        _write_rows([table.header(), *table.rows()], fmt, out)
    else:
        raise ParameterError(f"unsupported format {fmt!r} for series")


def read_series(text: str, fmt: str = "csv") -> SeriesTable:
    """Parse a table written by :func:`write_series` (CSV or TSV)."""
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
    elif fmt == "tsv":
        rows = [line.split("\t") for line in text.splitlines()]
    else:
        raise ParameterError(f"cannot read series from {fmt!r}")
    rows = [r for r in rows if r]
    if not rows or rows[0][0] != "window_start":
        raise ParameterError("not a series table: missing window_start header")
    header, body = rows[0], rows[1:]
    if (len(header) - 1) % 2:
        raise ParameterError("series header must hold observed/chi column pairs")
    columns = []
    for j in range(1, len(header), 2):
        parts = header[j].split("|")
        if len(parts) < 2 or parts[1] != OBSERVED:
            raise ParameterError(f"bad series column {header[j]!r}")
        observed = tuple(int(r[j]) for r in body)
        chi = tuple(float(r[j + 1]) if r[j + 1] else None for r in body)
        columns.append(SeriesColumn(parts[0], observed, chi, ABSENT in parts[2:]))
    return SeriesTable(tuple(r[0] for r in body), tuple(columns))


# -- cluster breakdowns -----------------------------------------------------


def write_breakdowns(
    breakdowns: Sequence[CategoryBreakdown], fmt: str, out: IO[str]
) -> None:
    if fmt == "json":
        data = [
            {
                "category": b.category,
                "no_data": b.no_data,
                "clusters": [
                    {
                        "cluster": name,
                        "count": count,
                        "share": None if b.shares is None else b.shares[name],
                    }
                    for name, count in b.counts.items()
                ],
            }
            for b in breakdowns
        ]
        json.dump(data, out, ensure_ascii=False, indent=2)
        out.write("\n")
        return
    if fmt not in ("csv", "tsv"):
        raise ParameterError(f"unsupported format {fmt!r} for cluster breakdowns")
    rows: list[list[object]] = [["category", "cluster", "count", "share"]]
    for b in breakdowns:
        for name, count in b.counts.items():
            share = "no data" if b.shares is None else fmt_float(b.shares[name])
            rows.append([b.category, name, count, share])
    _write_rows(rows, fmt, out)

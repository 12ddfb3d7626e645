import random
from collections import Counter
from datetime import date, timedelta

import pytest
from hypothesis import given, strategies as st

from banglatrend.corpus import Corpus, Document, WindowPartition
from banglatrend.errors import DomainError, ParameterError, UndefinedScoreError
from banglatrend.ngrams import FrequencyTable, count_frequencies
from banglatrend.scoring import (
    chi_square,
    expected_frequency,
    rank_all,
    rank_window,
    term_series,
    top_k,
)

from helpers import (
    END,
    START,
    BIGRAM_WEEK,
    BIGRAM_WEEK_CHI,
    BIGRAM_WEEK_DAY,
    TRIGRAM_WEEK,
    TRIGRAM_WEEK_CHI,
    reconstruction_corpus,
)


def direct_chi(o, total, W):
    # straight transcription of the formula, kept apart from the library path
    avg = total / W
    return (o - avg) * (o - avg) / avg


def synthetic_table(window_counts: dict[int, dict], W: int, n: int = 1) -> FrequencyTable:
    p = WindowPartition(date(2010, 1, 1), date(2010, 1, 1) + timedelta(days=W - 1), 1)
    wc = {i: Counter(window_counts.get(i, {})) for i in range(1, W + 1)}
    totals = Counter()
    for c in wc.values():
        totals.update(c)
    return FrequencyTable(p, n, "surface", wc, totals)


def test_expected_frequency_examples():
    assert expected_frequency(12, 18) == 12 / 18
    assert expected_frequency(42, 18) == pytest.approx(7 / 3, rel=1e-15)
    assert expected_frequency(18, 18) == 1
    with pytest.raises(UndefinedScoreError):
        expected_frequency(0, 18)
    with pytest.raises(ParameterError):
        expected_frequency(3, 0)


def test_chi_square_examples():
    assert chi_square(29, 42 / 18) == pytest.approx(304.76190476190476, abs=1e-9)
    assert chi_square(12, 12 / 18) == 192.66666666666669
    assert chi_square(5, 5) == 0
    assert chi_square(30, 33 / 18) == pytest.approx(432.7424242424243, abs=1e-9)
    with pytest.raises(DomainError):
        chi_square(3, 0)


@pytest.mark.parametrize(
    "row,chi", list(zip(BIGRAM_WEEK + TRIGRAM_WEEK, BIGRAM_WEEK_CHI + TRIGRAM_WEEK_CHI))
)
def test_every_printed_value_recovered(row, chi):
    _, observed, total = row
    got = chi_square(observed, expected_frequency(total, 18))
    assert abs(got - chi) <= 1e-9
    assert repr(got) == repr(chi)


@given(st.integers(1, 1000), st.integers(1, 100))
def test_closed_form_single_window(T, W):
    table = synthetic_table({1: {("g",): T}}, W)
    (entry,) = rank_window(table, 1).entries
    closed = T * (W - 1) ** 2 / W
    if closed == 0:
        assert entry.chi == 0
    else:
        assert abs(entry.chi - closed) / closed < 1e-12


@given(st.integers(1, 50), st.integers(1, 50), st.floats(0.1, 20))
def test_scale_homogeneity(o, e, c):
    assert chi_square(c * o, c * e) == pytest.approx(c * chi_square(o, e), rel=1e-12)


def test_ranking_orders_bigram_week():
    corpus = reconstruction_corpus(BIGRAM_WEEK, BIGRAM_WEEK_DAY)
    table = count_frequencies(corpus, WindowPartition(START, END, 7), 2)
    ranking = top_k(rank_window(table, 13), 5)
    assert [e.text for e in ranking] == [t for t, _, _ in BIGRAM_WEEK]
    for e, chi in zip(ranking, BIGRAM_WEEK_CHI):
        assert abs(e.chi - chi) <= 1e-9


def test_tie_break_frequency_then_lexicographic():
    # uniform profiles all score 0; q is more frequent, p/r/s tie fully
    table = synthetic_table(
        {
            1: {("p",): 3, ("q",): 9, ("s",): 3, ("r",): 3},
            2: {("p",): 3, ("q",): 9, ("s",): 3, ("r",): 3},
            3: {("p",): 3, ("q",): 9, ("s",): 3, ("r",): 3},
            4: {("p",): 3, ("q",): 9, ("s",): 3, ("r",): 3},
        },
        W=4,
    )
    ranking = rank_window(table, 1)
    assert all(e.chi == 0 for e in ranking)
    assert [e.ngram for e in ranking] == [("q",), ("p",), ("r",), ("s",)]


def test_equal_chi_ranks_higher_frequency_first():
    # W=4: o=10 with total 18 and o=7 with total 72 both score exactly 121/18
    table = synthetic_table(
        {1: {("b",): 7, ("a",): 10}, 2: {("b",): 65, ("a",): 8}}, W=4
    )
    ranking = rank_window(table, 1)
    assert ranking[0].chi == ranking[1].chi == pytest.approx(121 / 18)
    assert [(e.ngram, e.observed) for e in ranking] == [(("a",), 10), (("b",), 7)]
    # the tie-break must not depend on the n-gram text
    table = synthetic_table(
        {1: {("a",): 7, ("b",): 10}, 2: {("a",): 65, ("b",): 8}}, W=4
    )
    assert [e.observed for e in rank_window(table, 1)] == [10, 7]


def test_top_k():
    table = synthetic_table({1: {(c,): i + 1 for i, c in enumerate("abcde")}}, 3)
    ranking = rank_window(table, 1)
    assert top_k(ranking, 5).entries == ranking.entries
    assert len(top_k(ranking, 10)) == 5
    assert top_k(ranking, 1).entries == ranking.entries[:1]
    with pytest.raises(ParameterError):
        top_k(ranking, 0)


def test_empty_window_and_min_observed():
    table = synthetic_table({1: {("a",): 1, ("b",): 3}}, 3)
    assert len(rank_window(table, 2)) == 0
    assert [e.ngram for e in rank_window(table, 1, min_observed=2)] == [("b",)]
    with pytest.raises(ParameterError):
        rank_window(table, 99)


@pytest.mark.parametrize("seed", range(20))
def test_stored_chi_matches_direct_evaluation(seed):
    rng = random.Random(seed)
    W = rng.randint(1, 12)
    counts = {w: {(rng.choice("abcdefg"),): rng.randint(1, 30) for _ in range(5)}
              for w in range(1, W + 1)}
    table = synthetic_table(counts, W)
    rankings = rank_all(table, k=None)
    sequential_again = rank_all(table, k=None)
    parallel = rank_all(table, k=None, workers=4)
    assert rankings == sequential_again == parallel
    for ranking in rankings:
        keys = [(-e.chi, -e.observed, e.ngram) for e in ranking]
        assert keys == sorted(keys)
        assert sorted(ranking.entries, key=lambda e: e.sort_key()) == list(ranking.entries)
        for e in ranking:
            ref = direct_chi(e.observed, table.totals[e.ngram], W)
            assert e.chi == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_duplication_scales_chi_and_keeps_order():
    corpus = reconstruction_corpus(BIGRAM_WEEK, BIGRAM_WEEK_DAY)
    dup = Corpus(corpus.documents + tuple(Document(d.id + "x", d.date, d.body) for d in corpus))
    p = WindowPartition(START, END, 7)
    r1 = rank_window(count_frequencies(corpus, p, 2), 13)
    r2 = rank_window(count_frequencies(dup, p, 2), 13)
    assert [e.ngram for e in r1] == [e.ngram for e in r2]
    for a, b in zip(r1, r2):
        assert b.chi == pytest.approx(2 * a.chi, rel=1e-12)


def test_term_series_single_window():
    corpus = reconstruction_corpus(BIGRAM_WEEK, BIGRAM_WEEK_DAY)
    table = count_frequencies(corpus, WindowPartition(START, END, 7), 2)
    s = term_series(("বিআরটিসির", "বাস"), table)
    assert len(s.points) == 18 and not s.absent
    assert [p.observed for p in s.points] == [0] * 12 + [12] + [0] * 5
    assert s.total == table.totals[("বিআরটিসির", "বাস")] == 12
    # zero-observed points score chi(0, e) = e
    assert s.points[0].chi == pytest.approx(12 / 18)
    assert s.points[12].chi == 192.66666666666669


def test_term_series_uniform_and_absent():
    table = synthetic_table({w: {("u",): 3} for w in range(1, 7)}, 6)
    s = term_series(("u",), table)
    assert all(p.chi == 0 for p in s.points)
    missing = term_series(("zz",), table)
    assert missing.absent and all(p.observed == 0 and p.chi is None for p in missing.points)
    with pytest.raises(ParameterError):
        term_series(("a", "b"), table)


@given(st.lists(st.integers(0, 20), min_size=1, max_size=15))
def test_series_sums_to_total(profile):
    W = len(profile)
    table = synthetic_table({i + 1: ({("t",): c} if c else {}) for i, c in enumerate(profile)}, W)
    s = term_series(("t",), table)
    assert s.total == sum(profile) == table.total(("t",))
    assert len(s.points) == W

import math

import pytest

from logometre import partition, specificity, specificity_from_counts
from logometre.dictionary import log10_hypergeom_tail

from oracles import hypergeom_log10_tails


def test_part_equals_whole_is_neutral(hand_corpus):
    sub = partition(hand_corpus, {})
    score = specificity(sub, hand_corpus, "pays", ("NOUN", "PROPN"))
    assert score.part_freq == score.corpus_freq
    assert score.z == 0.0 and score.log10p == 0.0


def test_absent_lemma_is_neutral(hand_corpus):
    sub = partition(hand_corpus, {"country": "FR"})
    score = specificity(sub, hand_corpus, "inexistant", ("NOUN", "PROPN"))
    assert score.corpus_freq == 0
    assert score.z == 0.0 and score.log10p == 0.0


def test_fixed_point_against_exact_enumeration():
    # T=100, F=10, t=50, f=9: over-represented tail P(X >= 9)
    lo, hi, log10_ge, _ = hypergeom_log10_tails(100, 10, 50)
    expected_log10p = -log10_ge[9 - lo]
    score = specificity_from_counts("w", 9, 10, 50, 100)
    assert score.log10p == pytest.approx(expected_log10p, abs=1e-9)
    expected_z = (9 - 5) / math.sqrt(50 * 0.1 * 0.9 * 50 / 99)
    assert score.z == pytest.approx(expected_z, rel=1e-12)
    assert score.z > 0 and score.log10p > 0


def test_under_representation_sign():
    score = specificity_from_counts("w", 1, 10, 50, 100)
    assert score.z < 0 and score.log10p < 0


def test_specificity_of_partition(hand_corpus):
    # 'povo' occurs once, only in the BR document (1 of 10 filtered tokens)
    br = partition(hand_corpus, {"country": "BR"})
    score = specificity(br, hand_corpus, "povo", ("NOUN", "PROPN"))
    assert (score.part_freq, score.corpus_freq) == (1, 1)
    assert (score.part_size, score.corpus_size) == (2, 10)
    assert score.z > 0 and score.log10p > 0


def test_exhaustive_small_population_against_oracle():
    # quick development-scale sweep; the full T<=60 sweep runs in acceptance
    for T in range(0, 26):
        for F in range(0, T + 1):
            for t in range(0, T + 1):
                lo, hi, log10_ge, log10_le = hypergeom_log10_tails(T, F, t)
                for f in range(lo, hi + 1):
                    score = specificity_from_counts("w", f, F, t, T)
                    if T == 0 or F == 0 or t == 0 or t == T or F == T:
                        assert score.log10p == 0.0
                        continue
                    expected_mean = t * F / T
                    if f >= expected_mean:
                        expected = -log10_ge[f - lo]
                    else:
                        expected = log10_le[f - lo]
                    expected = max(-308.0, min(308.0, expected))
                    assert score.log10p == pytest.approx(expected, abs=1e-9), \
                        (T, F, t, f)
                    deviation = f - expected_mean
                    if deviation > 0:
                        assert score.z > 0
                    elif deviation < 0:
                        assert score.z < 0


def test_tail_function_edges():
    assert log10_hypergeom_tail(10, 5, 4, 0, upper=True) == 0.0      # P = 1
    assert log10_hypergeom_tail(10, 5, 4, 5, upper=True) == -math.inf
    assert log10_hypergeom_tail(10, 5, 4, 4, upper=False) == 0.0
    with pytest.raises(ValueError):
        log10_hypergeom_tail(10, 11, 4, 0, upper=True)


def test_large_population_stability():
    # values representative of a 1M-token corpus; tail must stay finite and
    # agree with the complement identity P(X>=f) + P(X<=f-1) = 1.
    # tolerance reflects lgamma rounding at ~1e7-sized arguments
    T, F, t, f = 1_000_000, 5_000, 20_000, 150
    upper = log10_hypergeom_tail(T, F, t, f, upper=True)
    lower = log10_hypergeom_tail(T, F, t, f - 1, upper=False)
    total = 10 ** upper + 10 ** lower
    assert total == pytest.approx(1.0, abs=1e-7)

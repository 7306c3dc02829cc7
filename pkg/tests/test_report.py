import json

import numpy as np
import pytest

from logometre import (
    ReportConfig,
    build_cooc_matrix,
    build_dictionary,
    build_report,
    compare_ranks,
    correspondence_analysis,
    pivot_profile,
    render_report,
    select_top_lemmas,
)
from logometre.errors import ParameterMismatch
from logometre.lexicon import identity_lexicon
from logometre.report import _assemble
from logometre.serialize import canonical_json

CONFIG = ReportConfig(k=20, n_lemmas=60, pivots=(("na005", "nb005"),),
                      cluster_k=4)


@pytest.fixture(scope="module")
def report(fixture_corpora, fixture_lexicon):
    corpus_a, corpus_b = fixture_corpora
    return build_report(corpus_a, corpus_b, fixture_lexicon, CONFIG)


def test_self_comparison_identity(fixture_corpora):
    corpus_a, _ = fixture_corpora
    d = build_dictionary(corpus_a.whole(), ("NOUN", "PROPN"))
    lex = identity_lexicon([e.lemma for e in d.entries])
    config = ReportConfig(k=10, n_lemmas=30)
    rep = build_report(corpus_a, corpus_a, lex, config)
    assert rep.rank_comparison.overlap == 10
    sig_a = rep.sides["a"].ca.singular_values
    sig_b = rep.sides["b"].ca.singular_values
    assert np.array_equal(sig_a, sig_b)


def test_fixture_overlap_planted(report):
    assert report.rank_comparison.overlap == 18
    top = {p.rank_a: p for p in report.rank_comparison.pairs if p.rank_a}
    assert top[1].lemma_a == "na001" and top[1].lemma_b == "nb001"
    assert top[1].rank_b == 1


def test_composition_purity(report, fixture_corpora, fixture_lexicon):
    """Every number in the report equals a standalone module call."""
    corpus_a, corpus_b = fixture_corpora
    sub = corpus_a.whole()
    d = build_dictionary(sub, CONFIG.pos_filter)
    assert report.sides["a"].dictionary.entries == d.entries

    comparison = compare_ranks(
        d, build_dictionary(corpus_b.whole(), CONFIG.pos_filter),
        fixture_lexicon, CONFIG.k)
    assert report.rank_comparison.overlap == comparison.overlap
    assert report.rank_comparison.pairs == comparison.pairs

    lemmas = select_top_lemmas(d, CONFIG.n_lemmas)
    matrix = build_cooc_matrix(sub, lemmas, CONFIG.context)
    solution = correspondence_analysis(matrix)
    assert np.array_equal(report.sides["a"].ca.singular_values,
                          solution.singular_values)

    profile = pivot_profile(sub, "na005", CONFIG.context,
                            min_joint=CONFIG.min_joint, pos_filter=CONFIG.pos_filter)
    assert report.sides["a"].pivot_profiles["na005"].entries == profile.entries


def test_parameter_echo_reproduces_byte_identical_json(report, fixture_corpora,
                                                       fixture_lexicon):
    first = render_report(report, "json")
    echoed = ReportConfig.from_dict(json.loads(first)["parameters"])
    corpus_a, corpus_b = fixture_corpora
    again = build_report(corpus_a, corpus_b, fixture_lexicon, echoed)
    assert render_report(again, "json") == first


def test_json_round_trip_structure(report):
    payload = json.loads(render_report(report, "json"))
    assert payload["schema"] == "logometre-report/1"
    assert set(payload["sides"].keys()) == {"a", "b"}
    assert payload["corpora"]["a"]["language"] == "fr-x-syn"
    assert payload["sides"]["a"]["clusters"]["k"] == 4
    assert payload["rank_comparison"]["overlap"] == 18
    # canonical serialization is stable through a parse cycle
    assert canonical_json(payload) == render_report(report, "json")


def test_identical_parameters_enforced(report):
    import dataclasses
    patched = dataclasses.replace(report.sides["b"], parameters=ReportConfig(k=99))
    with pytest.raises(ParameterMismatch):
        _assemble(report.sides["a"], patched)


def test_html_structure(report):
    html = render_report(report, "html")
    assert html.count('class="factor-map"') == 2
    assert html.count('class="rank-table"') == 1
    assert html.count('class="pivot-cloud"') == 2
    assert "na001" in html and "nb001" in html
    assert html.startswith("<!doctype html>")
    # self-contained: no external references
    assert "http://" not in html.replace("http://www.w3.org/2000/svg", "")
    assert "https://" not in html


def test_empty_pivots_no_cloud_section(fixture_corpora, fixture_lexicon):
    corpus_a, corpus_b = fixture_corpora
    rep = build_report(corpus_a, corpus_b, fixture_lexicon,
                       ReportConfig(k=5, n_lemmas=30))
    html = render_report(rep, "html")
    assert 'class="pivot-cloud"' not in html
    assert "Pivot cooccurrence clouds" not in html

"""Acceptance gate: one test per criterion, each printing a verdict line.

Tolerances and runtime budgets are pinned here and nowhere else. The big
reference numbers of the original study are not reproducible without its
(undistributed) corpus, so acceptance rests on oracle equivalence,
invariants, and the bundled synthetic bilingual fixture.
"""

import json
import time

import numpy as np
import pytest

import logometre
from logometre import (
    build_cooc_matrix,
    build_dictionary,
    compare_ranks,
    correspondence_analysis,
    parse_corpus,
    pivot_profile,
    select_top_lemmas,
)
from logometre.api import load_session, serve
from logometre.cli import main
from logometre.dictionary import specificity_from_counts
from logometre.synthetic import scaled_corpus

from oracles import (
    BUNDLED_MATRICES,
    ca_oracle,
    hypergeom_log10_tails,
    random_symmetric_counts,
)

POS = ("NOUN", "PROPN")


def _verdict(name, ok, detail=""):
    print(f"\nACCEPTANCE {'PASS' if ok else 'FAIL'}: {name}" +
          (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


# --- 1. CA oracle equivalence ---------------------------------------------------

def test_ca_oracle_equivalence():
    started = time.perf_counter()
    rng = np.random.default_rng(2024)
    matrices = [random_symmetric_counts(rng, int(rng.integers(3, 9)))
                for _ in range(50)]
    matrices.extend(BUNDLED_MATRICES.values())

    worst_sigma = 0.0
    worst_coord = 0.0
    for counts in matrices:
        solution = correspondence_analysis(np.asarray(counts))
        sigma_o, coords_o, _, _ = ca_oracle(counts)
        k = solution.k_max
        worst_sigma = max(worst_sigma,
                          float(np.abs(solution.singular_values - sigma_o[:k]).max()))
        for axis in range(k):
            got = solution.row_coords[:, axis]
            want = coords_o[:, axis]
            delta = min(np.abs(got - want).max(), np.abs(got + want).max())
            worst_coord = max(worst_coord, float(delta))
    elapsed = time.perf_counter() - started
    _verdict(
        "CA oracle equivalence (50 random 3-8 matrices + bundled fixtures)",
        worst_sigma < 1e-10 and worst_coord < 1e-9 and elapsed < 5.0,
        f"max sigma err {worst_sigma:.2e}, max coord err {worst_coord:.2e}, "
        f"{elapsed:.2f}s",
    )


# --- 2. CA invariants at scale --------------------------------------------------

@pytest.fixture(scope="module")
def million_token_text():
    return scaled_corpus(seed=7, n_nouns=360, target_tokens=1_000_000)


def test_ca_invariants_at_scale(million_token_text):
    started = time.perf_counter()
    corpus = parse_corpus(million_token_text)
    sub = corpus.whole()
    dictionary = build_dictionary(sub, POS)
    lemmas = select_top_lemmas(dictionary, 300)
    matrix = build_cooc_matrix(sub, lemmas)
    solution = correspondence_analysis(matrix)
    elapsed = time.perf_counter() - started

    assert corpus.token_count >= 900_000
    assert matrix.counts.shape == (300, 300)

    f = solution.row_coords
    r = solution.row_masses
    sigma = solution.singular_values

    chi2_over_n = solution.total_inertia          # computed as sum of S^2
    inertia_err = abs(float((sigma ** 2).sum()) - chi2_over_n)
    centering_err = float(np.abs((r[:, None] * f).sum(axis=0)).max())
    gram = (f * r[:, None]).T @ f
    ortho_err = float(np.abs(gram - np.diag(sigma ** 2)).max())
    ctr_err = float(np.abs(solution.contributions.sum(axis=0) - 1).max())

    _verdict(
        "CA invariants on 300x300 matrix from a 1M-token corpus",
        inertia_err < 1e-10 and centering_err < 1e-9 and ortho_err < 1e-9
        and ctr_err < 1e-9 and elapsed < 60.0,
        f"inertia err {inertia_err:.2e}, centering {centering_err:.2e}, "
        f"orthogonality {ortho_err:.2e}, ctr {ctr_err:.2e}, pipeline {elapsed:.1f}s",
    )


# --- 3. Specificity oracle -------------------------------------------------------

def test_specificity_oracle_exhaustive():
    started = time.perf_counter()
    worst = 0.0
    sign_failures = 0
    checked = 0
    for T in range(0, 61):
        for F in range(0, T + 1):
            for t in range(0, T + 1):
                lo, hi, log10_ge, log10_le = hypergeom_log10_tails(T, F, t)
                for f in range(lo, hi + 1):
                    score = specificity_from_counts("w", f, F, t, T)
                    checked += 1
                    if T == 0 or F == 0 or t == 0 or t == T or F == T:
                        if score.log10p != 0.0 or score.z != 0.0:
                            sign_failures += 1
                        continue
                    mean = t * F / T
                    expected = (-log10_ge[f - lo] if f >= mean else log10_le[f - lo])
                    expected = max(-308.0, min(308.0, expected))
                    worst = max(worst, abs(score.log10p - expected))
                    deviation = f - mean
                    if deviation > 0 and not score.z > 0:
                        sign_failures += 1
                    elif deviation < 0 and not score.z < 0:
                        sign_failures += 1
    elapsed = time.perf_counter() - started
    _verdict(
        "specificity vs exact big-integer enumeration, all T <= 60",
        worst < 1e-9 and sign_failures == 0 and elapsed < 30.0,
        f"{checked} tuples, max |log10p err| {worst:.2e}, "
        f"{sign_failures} sign failures, {elapsed:.1f}s",
    )


# --- 4. Synthetic bilingual fixture ----------------------------------------------

def test_bilingual_fixture_overlap(fixture_corpora, fixture_lexicon):
    corpus_a, corpus_b = fixture_corpora
    dict_a = build_dictionary(corpus_a.whole(), POS)
    dict_b = build_dictionary(corpus_b.whole(), POS)
    comparison = compare_ranks(dict_a, dict_b, fixture_lexicon, 20)

    # independent recount: raw Counter over the parsed corpus, own top-20
    from collections import Counter
    def brute_top20(corpus):
        counts = Counter(tok.lemma
                         for doc in corpus.documents
                         for sent in doc.sentences
                         for tok in sent.tokens
                         if tok.pos in POS)
        ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return [lemma for lemma, _ in ordered[:20]]

    top_a = brute_top20(corpus_a)
    top_b = set(brute_top20(corpus_b))
    brute_overlap = sum(1 for lemma in top_a
                        if fixture_lexicon.translate(lemma) in top_b)

    rank1 = next(p for p in comparison.pairs if p.rank_a == 1)
    _verdict(
        "bilingual fixture: 18/20 overlap with rank-1 lemmas aligned",
        comparison.overlap == 18 == brute_overlap
        and rank1.lemma_a == "na001" and rank1.lemma_b == "nb001"
        and rank1.rank_b == 1,
        f"overlap {comparison.overlap}, brute recount {brute_overlap}, "
        f"rank-1 pair ({rank1.lemma_a}, {rank1.lemma_b})",
    )


# --- 5. CLI determinism -----------------------------------------------------------

def test_cli_determinism(fixture_files, tmp_path):
    matrix_path = tmp_path / "m.json"
    assert main(["cooc", str(fixture_files["a"]), "--n", "40",
                 "-o", str(matrix_path)]) == 0
    config_path = tmp_path / "cfg.json"
    config_path.write_text(json.dumps({"k": 20, "n_lemmas": 40,
                                       "pivots": [["na005", "nb005"]]}),
                           encoding="utf-8")

    def invocation(command, out):
        a, b, lex = (str(fixture_files["a"]), str(fixture_files["b"]),
                     str(fixture_files["lexicon"]))
        return {
            "validate": ["validate", a, "-o", out],
            "dict": ["dict", a, "--top", "30", "-o", out],
            "compare": ["compare", a, b, "--lexicon", lex, "--top", "20", "-o", out],
            "cooc": ["cooc", a, "--n", "40", "-o", out],
            "ca": ["ca", str(matrix_path), "--cluster", "4", "-o", out],
            "pivot": ["pivot", a, "--word", "na005", "-o", out],
            "report": ["report", a, b, "--lexicon", lex, "--config",
                       str(config_path), "-o", out],
        }[command]

    failures = []
    for command in ("validate", "dict", "compare", "cooc", "ca", "pivot", "report"):
        outputs = set()
        for run in range(3):
            out = tmp_path / f"{command}-{run}.out"
            argv = invocation(command, str(out))
            assert main(argv + ["--workers", "1"]) == 0
            outputs.add(out.read_bytes())
        out8 = tmp_path / f"{command}-w8.out"
        assert main(invocation(command, str(out8)) + ["--workers", "8"]) == 0
        outputs.add(out8.read_bytes())
        if len(outputs) != 1:
            failures.append(command)

    # serve: two service instances over the same report answer byte-identically
    report_path = tmp_path / "report-0.out"
    import urllib.request
    bodies = []
    for _ in range(2):
        report, corpora = load_session(report_path, corpus_a=str(fixture_files["a"]),
                                       corpus_b=str(fixture_files["b"]))
        svc = serve(report, corpora, port=0)
        try:
            snapshot = []
            for path in ("/api/meta", "/api/compare", "/api/dict/a?top=20",
                         "/api/ca/a?axes=1,2", "/api/pivot/a?word=na005&min=2"):
                with urllib.request.urlopen(
                        f"http://127.0.0.1:{svc.port}{path}") as response:
                    snapshot.append(response.read())
        finally:
            svc.stop()
        bodies.append(snapshot)
    if bodies[0] != bodies[1]:
        failures.append("serve")

    _verdict(
        "CLI determinism: byte-identical over 3 runs and workers {1, 8}",
        not failures,
        f"failing subcommands: {failures}" if failures else "8 subcommands checked",
    )


# --- 6. Pivot consistency ----------------------------------------------------------

def test_pivot_consistency_with_matrix(fixture_corpora):
    corpus_a, _ = fixture_corpora
    sub = corpus_a.whole()
    lemmas = select_top_lemmas(build_dictionary(sub, POS), 60)
    matrix = build_cooc_matrix(sub, lemmas)
    index = {lemma: i for i, lemma in enumerate(lemmas)}

    rng = np.random.default_rng(99)
    pivots = [lemmas[i] for i in rng.choice(len(lemmas), size=20, replace=False)]
    mismatches = 0
    for pivot in pivots:
        profile = pivot_profile(sub, pivot, min_joint=1)
        joint = {e.lemma: e.k for e in profile.entries}
        row = matrix.counts[index[pivot]]
        for other in lemmas:
            if other == pivot:
                continue
            if joint.get(other, 0) != row[index[other]]:
                mismatches += 1
    _verdict(
        "pivot profile joint counts equal cooccurrence cells (20 random pivots)",
        mismatches == 0,
        f"{mismatches} mismatching cells",
    )


# --- 7. Rank-1 independence --------------------------------------------------------

def test_rank_one_independence_inertia():
    a = np.array([4, 7, 2, 9, 3], dtype=float)
    solution = correspondence_analysis(np.outer(a, a))
    _verdict(
        "rank-1 independence matrix has total inertia <= 1e-12",
        solution.total_inertia <= 1e-12,
        f"total inertia {solution.total_inertia:.3e}",
    )

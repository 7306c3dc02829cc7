"""Paired two-corpus report: same-parameter outputs placed side by side.

No cross-language statistic beyond the rank-table overlap is computed; the
report's job is to guarantee that both sides were produced with identical
parameters and to echo those parameters so any number in it can be
regenerated independently. Interpretation of the two factor maps and pivot
clouds stays with the analyst.
"""

from __future__ import annotations

import html as html_mod
from dataclasses import dataclass
from typing import Optional

from .ca import CaSolution, IsotopyClustering, cluster_isotopies, correspondence_analysis, project
from .cooccurrence import (
    ContextSpec,
    build_cooc_matrix,
    pivot_profile,
    select_top_lemmas,
)
from .corpus import DEFAULT_NOUN_TAGS, AnnotatedCorpus, serialize_corpus
from .dictionary import (
    FrequencyDictionary,
    RankComparison,
    build_dictionary,
    compare_ranks,
    dictionary_to_dict,
    top_k,
)
from .errors import LexiconLanguageMismatch, ParameterMismatch
from .lexicon import BilingualLexicon
from .plots import scatter_svg, word_cloud_svg
from .serialize import canonical_json, sha256_text

REPORT_SCHEMA = "logometre-report/1"


@dataclass(frozen=True)
class ReportConfig:
    k: int = 20
    n_lemmas: int = 300
    context: ContextSpec = ContextSpec("sentence")
    pos_filter: tuple = DEFAULT_NOUN_TAGS
    pivots: tuple = ()              # ((lemma_a, lemma_b), ...)
    min_joint: int = 2
    cluster_k: Optional[int] = None
    cluster_axes: tuple = (1, 2)
    seed: int = 42

    def to_dict(self):
        return {
            "k": self.k,
            "n_lemmas": self.n_lemmas,
            "context": self.context.to_dict(),
            "pos_filter": list(self.pos_filter),
            "pivots": [list(p) for p in self.pivots],
            "min_joint": self.min_joint,
            "cluster_k": self.cluster_k,
            "cluster_axes": list(self.cluster_axes),
            "seed": self.seed,
        }

    @staticmethod
    def from_dict(d) -> "ReportConfig":
        cfg = ReportConfig()
        return ReportConfig(
            k=d.get("k", cfg.k),
            n_lemmas=d.get("n_lemmas", cfg.n_lemmas),
            context=ContextSpec.from_dict(d["context"]) if "context" in d else cfg.context,
            pos_filter=tuple(d.get("pos_filter", cfg.pos_filter)),
            pivots=tuple(tuple(p) for p in d.get("pivots", ())),
            min_joint=d.get("min_joint", cfg.min_joint),
            cluster_k=d.get("cluster_k", cfg.cluster_k),
            cluster_axes=tuple(d.get("cluster_axes", cfg.cluster_axes)),
            seed=d.get("seed", cfg.seed),
        )


@dataclass(frozen=True)
class SideBundle:
    side: str
    language: str
    parameters: ReportConfig
    dictionary: FrequencyDictionary
    matrix_sha256: str
    matrix_labels: int
    ca: CaSolution
    clusters: Optional[IsotopyClustering]
    pivot_profiles: dict        # pivot lemma -> PivotProfile


@dataclass(frozen=True)
class ComparisonReport:
    parameters: ReportConfig
    corpora: dict               # side -> {language, path, sha256, documents, tokens}
    lexicon_meta: dict
    rank_comparison: RankComparison
    paired_pivots: tuple
    sides: dict                 # side -> SideBundle

    def to_dict(self):
        sides = {}
        for name in ("a", "b"):
            bundle = self.sides[name]
            sides[name] = {
                "language": bundle.language,
                "dictionary": dictionary_to_dict(bundle.dictionary),
                "top_table": [
                    {"rank": e.rank, "lemma": e.lemma, "count": e.count}
                    for e in top_k(bundle.dictionary, self.parameters.k)
                ],
                "cooc_matrix": {
                    "sha256": bundle.matrix_sha256,
                    "n_labels": bundle.matrix_labels,
                    "context": self.parameters.context.to_dict(),
                },
                "ca": bundle.ca.to_dict(),
                "clusters": bundle.clusters.to_dict() if bundle.clusters else None,
                "pivot_profiles": {
                    pivot: profile.to_dict()
                    for pivot, profile in sorted(bundle.pivot_profiles.items())
                },
            }
        return {
            "schema": REPORT_SCHEMA,
            "parameters": self.parameters.to_dict(),
            "corpora": self.corpora,
            "lexicon": self.lexicon_meta,
            "rank_comparison": self.rank_comparison.to_dict(),
            "paired_pivots": [list(p) for p in self.paired_pivots],
            "sides": sides,
        }


def _build_side(side, corpus, config, workers):
    sub = corpus.whole()
    dictionary = build_dictionary(sub, config.pos_filter, workers=workers)
    lemmas = select_top_lemmas(dictionary, config.n_lemmas) if dictionary.entries else []
    matrix = build_cooc_matrix(sub, lemmas, config.context, workers=workers) \
        if len(lemmas) >= 2 else None
    solution = correspondence_analysis(matrix) if matrix is not None else None
    clusters = None
    if solution is not None and config.cluster_k:
        clusters = cluster_isotopies(solution, config.cluster_k,
                                     axes=config.cluster_axes, seed=config.seed)
    profiles = {}
    pivot_index = 0 if side == "a" else 1
    for pair in config.pivots:
        pivot = pair[pivot_index]
        profiles[pivot] = pivot_profile(sub, pivot, config.context,
                                        min_joint=config.min_joint,
                                        pos_filter=config.pos_filter)
    matrix_json = canonical_json(matrix.to_dict()) if matrix is not None else ""
    return SideBundle(
        side=side,
        language=corpus.language,
        parameters=config,
        dictionary=dictionary,
        matrix_sha256=sha256_text(matrix_json) if matrix is not None else "",
        matrix_labels=len(matrix.labels) if matrix is not None else 0,
        ca=solution,
        clusters=clusters,
        pivot_profiles=profiles,
    )


def _assemble(side_a: SideBundle, side_b: SideBundle):
    """Refuse to pair bundles whose parameters differ in any way."""
    if side_a.parameters != side_b.parameters:
        raise ParameterMismatch(
            "the two sides were built with different parameters; per-side overrides "
            "are not allowed")
    return {"a": side_a, "b": side_b}


def build_report(corpus_a: AnnotatedCorpus, corpus_b: AnnotatedCorpus,
                 lexicon: BilingualLexicon, config: ReportConfig = ReportConfig(),
                 corpus_paths=(None, None), workers: int = 1) -> ComparisonReport:
    """Run the whole parcours on both corpora with one shared configuration."""
    if lexicon.lang_a is not None and lexicon.lang_a != corpus_a.language:
        raise LexiconLanguageMismatch(
            f"lexicon side A {lexicon.lang_a!r} vs corpus {corpus_a.language!r}")
    if lexicon.lang_b is not None and lexicon.lang_b != corpus_b.language:
        raise LexiconLanguageMismatch(
            f"lexicon side B {lexicon.lang_b!r} vs corpus {corpus_b.language!r}")

    side_a = _build_side("a", corpus_a, config, workers)
    side_b = _build_side("b", corpus_b, config, workers)
    sides = _assemble(side_a, side_b)

    comparison = compare_ranks(side_a.dictionary, side_b.dictionary, lexicon, config.k)

    corpora_meta = {}
    for name, corpus, path in (("a", corpus_a, corpus_paths[0]),
                               ("b", corpus_b, corpus_paths[1])):
        corpora_meta[name] = {
            "language": corpus.language,
            "path": str(path) if path is not None else None,
            "sha256": sha256_text(serialize_corpus(corpus)),
            "documents": len(corpus.documents),
            "tokens": corpus.token_count,
        }

    return ComparisonReport(
        parameters=config,
        corpora=corpora_meta,
        lexicon_meta={"id": lexicon.id, "lang_a": lexicon.lang_a,
                      "lang_b": lexicon.lang_b, "pairs": len(lexicon)},
        rank_comparison=comparison,
        paired_pivots=tuple(tuple(p) for p in config.pivots),
        sides=sides,
    )


# --- rendering ----------------------------------------------------------------

_HTML_STYLE = """
body { font-family: sans-serif; margin: 24px auto; max-width: 1280px; color: #222; }
h1 { font-size: 20px; } h2 { font-size: 16px; margin-top: 28px; }
table.rank-table { border-collapse: collapse; }
table.rank-table td, table.rank-table th { border: 1px solid #ccc; padding: 3px 8px; font-size: 13px; }
table.rank-table td.hit { background: #eef6ee; }
table.rank-table td.miss { background: #fbeeee; }
.pair { display: flex; gap: 16px; flex-wrap: wrap; }
.pair > figure { margin: 0; }
figcaption { font-size: 12px; color: #555; text-align: center; padding: 4px; }
dl.params { font-size: 13px; } dl.params dt { font-weight: bold; float: left; clear: left; width: 110px; }
"""


def _rank_table_html(comparison: RankComparison) -> str:
    rows = ["<table class=\"rank-table\"><thead><tr>"
            "<th>rank A</th><th>lemma A</th><th>lemma B</th><th>rank B</th>"
            "</tr></thead><tbody>"]
    for pair in comparison.pairs:
        hit = (pair.rank_a is not None and pair.rank_b is not None
               and pair.rank_b <= comparison.k)
        cls = "hit" if hit else "miss"
        cells = []
        for value in (pair.rank_a, pair.lemma_a, pair.lemma_b, pair.rank_b):
            shown = "" if value is None else html_mod.escape(str(value))
            cells.append(f'<td class="{cls}">{shown}</td>')
        rows.append("<tr>" + "".join(cells) + "</tr>")
    rows.append("</tbody></table>")
    return "".join(rows)


def render_report(report: ComparisonReport, format: str = "json") -> str:
    """json is the canonical machine form; html is a self-contained page."""
    if format == "json":
        return canonical_json(report.to_dict())
    if format != "html":
        raise ValueError(f"unknown report format {format!r}")

    cfg = report.parameters
    lang_a = report.corpora["a"]["language"]
    lang_b = report.corpora["b"]["language"]
    parts = [
        "<!doctype html><html><head><meta charset=\"utf-8\">",
        f"<title>logometric comparison: {html_mod.escape(lang_a)} vs {html_mod.escape(lang_b)}</title>",
        f"<style>{_HTML_STYLE}</style></head><body>",
        f"<h1>Logometric comparison: {html_mod.escape(lang_a)} vs {html_mod.escape(lang_b)}</h1>",
        "<dl class=\"params\">",
        f"<dt>top-k</dt><dd>{cfg.k}</dd>",
        f"<dt>lemmas</dt><dd>{cfg.n_lemmas}</dd>",
        f"<dt>context</dt><dd>{html_mod.escape(cfg.context.unit)}</dd>",
        f"<dt>POS filter</dt><dd>{html_mod.escape(', '.join(cfg.pos_filter))}</dd>",
        f"<dt>overlap</dt><dd>{report.rank_comparison.overlap} of {cfg.k}</dd>",
        "</dl>",
        f"<h2>Top-{cfg.k} rank table</h2>",
        _rank_table_html(report.rank_comparison),
        "<h2>Factor maps</h2>",
        "<div class=\"pair\">",
    ]
    for name in ("a", "b"):
        bundle = report.sides[name]
        language = report.corpora[name]["language"]
        if bundle.ca is not None and bundle.ca.k_max >= 2:
            points = project(bundle.ca, (1, 2))
            masses = [float(m) for m in bundle.ca.row_masses]
            clusters = bundle.clusters.assignment if bundle.clusters else None
            svg = scatter_svg(points, axes=(1, 2),
                              inertia_pct=(float(bundle.ca.inertia_pct[0]),
                                           float(bundle.ca.inertia_pct[1])),
                              masses=masses, clusters=clusters)
            parts.append(f"<figure>{svg}<figcaption>{html_mod.escape(language)}"
                         f"</figcaption></figure>")
        else:
            parts.append(f"<figure><figcaption>{html_mod.escape(language)}: "
                         "no factor solution</figcaption></figure>")
    parts.append("</div>")

    if report.paired_pivots:
        parts.append("<h2>Pivot cooccurrence clouds</h2>")
        for pivot_a, pivot_b in report.paired_pivots:
            parts.append("<div class=\"pair\">")
            for name, pivot in (("a", pivot_a), ("b", pivot_b)):
                profile = report.sides[name].pivot_profiles.get(pivot)
                if profile is None:
                    continue
                entries = [(e.lemma, max(0.0, e.z)) for e in profile.entries]
                svg = word_cloud_svg(entries, title=f"{pivot} ({report.corpora[name]['language']})")
                parts.append(f"<figure>{svg}<figcaption>contexts with pivot: "
                             f"{profile.context_count}</figcaption></figure>")
            parts.append("</div>")

    parts.append("</body></html>")
    return "".join(parts)

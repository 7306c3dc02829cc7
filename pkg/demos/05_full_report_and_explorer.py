"""The whole parcours in one call: paired report, HTML render, live explorer.

Builds the comparison report for the bundled bilingual fixture, writes the
canonical JSON and the self-contained HTML, then starts the read-only HTTP
explorer and queries a few endpoints.

Run with: python demos/05_full_report_and_explorer.py
"""

import json
import urllib.request
from pathlib import Path

from logometre import ReportConfig, build_report, parse_corpus, render_report
from logometre.api import serve
from logometre.lexicon import parse_lexicon
from logometre.synthetic import bilingual_fixture

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

fixture = bilingual_fixture()
corpus_a = parse_corpus(fixture.corpus_a)
corpus_b = parse_corpus(fixture.corpus_b)
lexicon = parse_lexicon(fixture.lexicon)

config = ReportConfig(k=20, n_lemmas=120, pivots=(("na005", "nb005"),), cluster_k=4)
report = build_report(corpus_a, corpus_b, lexicon, config)

report_json = render_report(report, "json")
(out / "report.json").write_text(report_json + "\n", encoding="utf-8")
(out / "report.html").write_text(render_report(report, "html") + "\n", encoding="utf-8")
print(f"report.json ({len(report_json) / 1e6:.2f} MB) and report.html written to {out}/")
print(f"rank overlap: {report.rank_comparison.overlap} of {config.k}")

service = serve(json.loads(report_json), {"a": corpus_a, "b": corpus_b}, port=0)
base = f"http://127.0.0.1:{service.port}"
print(f"\nexplorer listening on {base}")
try:
    for path in ("/api/meta", "/api/dict/a?top=3", "/api/ca/a?axes=1,2",
                 "/api/pivot/b?word=nb005&min=2"):
        with urllib.request.urlopen(base + path) as response:
            payload = json.loads(response.read())
        if path.startswith("/api/meta"):
            print(f"  {path}: languages {payload['languages']}")
        elif path.startswith("/api/dict"):
            print(f"  {path}: {[e['lemma'] for e in payload['entries']]}")
        elif path.startswith("/api/ca"):
            print(f"  {path}: {len(payload['points'])} points, "
                  f"axes carry {payload['axis_inertia_pct']} % of inertia")
        else:
            print(f"  {path}: {len(payload['entries'])} cooccurrents, "
                  f"top {payload['entries'][0]['lemma']}")
finally:
    service.stop()
print("explorer stopped")

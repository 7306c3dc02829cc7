"""Correspondence analysis of the cooccurrence matrix: axes, contributions,
optional isotopy clustering, and an SVG factor map.

The synthetic corpus plants four vocabulary "topics" plus a generic core, so
the first axes separate four lobes around the origin.

Run with: python demos/04_correspondence_analysis.py
"""

from collections import Counter
from pathlib import Path

from logometre import (
    build_cooc_matrix,
    build_dictionary,
    cluster_isotopies,
    correspondence_analysis,
    parse_corpus,
    project,
    select_top_lemmas,
)
from logometre.plots import scatter_svg
from logometre.synthetic import bilingual_fixture

corpus = parse_corpus(bilingual_fixture().corpus_a)
sub = corpus.whole()
dictionary = build_dictionary(sub, ("NOUN", "PROPN"))
matrix = build_cooc_matrix(sub, select_top_lemmas(dictionary, 120))

solution = correspondence_analysis(matrix)
print(f"{solution.k_max} axes retained, total inertia {solution.total_inertia:.4f}")
print("axis  sigma     inertia%")
for k in range(min(6, solution.k_max)):
    print(f"{k + 1:>4}  {solution.singular_values[k]:.5f}  "
          f"{solution.inertia_pct[k]:8.2f}")

# which lemmas structure axis 1?
ctr1 = sorted(zip(solution.labels, solution.contributions[:, 0]),
              key=lambda kv: -kv[1])[:8]
print("\nhighest contributions to axis 1:")
for lemma, ctr in ctr1:
    print(f"  {lemma:10s} ctr={ctr:.3f}")

clustering = cluster_isotopies(solution, k=4, axes=(1, 2), seed=42)
sizes = Counter(clustering.assignment.values())
print(f"\nk-means isotopy clustering (k=4, axes 1-2, seed 42): "
      f"sizes {sorted(sizes.values(), reverse=True)}")

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
points = project(solution, (1, 2))
svg = scatter_svg(points, axes=(1, 2),
                  inertia_pct=(float(solution.inertia_pct[0]),
                               float(solution.inertia_pct[1])),
                  masses=[float(m) for m in solution.row_masses],
                  clusters=clustering.assignment)
(out / "factor_map_a.svg").write_text(svg, encoding="utf-8")
print(f"\nfactor map written to {out / 'factor_map_a.svg'}")

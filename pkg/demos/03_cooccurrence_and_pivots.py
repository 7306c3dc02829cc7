"""Cooccurrence contingency matrix and pivot-word profiles.

Run with: python demos/03_cooccurrence_and_pivots.py
"""

from logometre import (
    ContextSpec,
    build_cooc_matrix,
    build_dictionary,
    parse_corpus,
    pivot_profile,
    select_top_lemmas,
)
from logometre.synthetic import bilingual_fixture

corpus = parse_corpus(bilingual_fixture().corpus_a)
sub = corpus.whole()
nouns = ("NOUN", "PROPN")

dictionary = build_dictionary(sub, nouns)
lemmas = select_top_lemmas(dictionary, 60)
matrix = build_cooc_matrix(sub, lemmas, ContextSpec("sentence"))
print(f"{len(matrix.labels)}x{len(matrix.labels)} matrix over {matrix.n_contexts} "
      f"sentence contexts; cell sum {int(matrix.counts.sum())}")
print(f"symmetric: {(matrix.counts == matrix.counts.T).all()}, "
      f"zero diagonal: {(matrix.counts.diagonal() == 0).all()}")

head = matrix.labels[:6]
print("\ntop-left corner:")
print("        " + "".join(f"{l:>8s}" for l in head))
for i, label in enumerate(head):
    print(f"{label:>8s}" + "".join(f"{int(matrix.counts[i, j]):>8d}"
                                   for j in range(len(head))))

# the same counting, seen from one pivot word
profile = pivot_profile(sub, "na005", ContextSpec("sentence"),
                        min_joint=2, pos_filter=nouns)
print(f"\npivot 'na005': present in {profile.context_count} of "
      f"{profile.total_contexts} contexts")
print(f"{'cooccurrent':12s} {'joint k':>7} {'F':>5} {'z':>8}  signed log10 tail")
for entry in profile.entries[:10]:
    tail = "" if entry.log10p is None else f"{entry.log10p:+10.3f}"
    print(f"{entry.lemma:12s} {entry.k:>7d} {entry.F:>5d} {entry.z:>8.3f}  {tail}")

# paragraph and fixed-window contexts are one flag away
for spec in (ContextSpec("paragraph"), ContextSpec("window", window=25)):
    alt = pivot_profile(sub, "na005", spec, min_joint=2, pos_filter=nouns)
    print(f"\nwith {spec.unit!r} contexts: {alt.total_contexts} contexts, "
          f"{len(alt.entries)} cooccurrents pass min_joint")

"""Cross-language rank alignment through an analyst-supplied lexicon.

The bundled synthetic pair plants the structure the engine is meant to
surface: both sides share 18 of their top-20 nouns through the lexicon and
the two rank-1 nouns correspond.

Run with: python demos/02_rank_alignment.py
"""

from logometre import build_dictionary, compare_ranks, parse_corpus
from logometre.lexicon import parse_lexicon
from logometre.synthetic import bilingual_fixture

fixture = bilingual_fixture()
corpus_a = parse_corpus(fixture.corpus_a)
corpus_b = parse_corpus(fixture.corpus_b)
lexicon = parse_lexicon(fixture.lexicon,
                        lang_a=corpus_a.language, lang_b=corpus_b.language)

print(f"side A: {corpus_a.language}, {corpus_a.token_count} tokens")
print(f"side B: {corpus_b.language}, {corpus_b.token_count} tokens")
print(f"lexicon: {len(lexicon)} pairs, id {lexicon.id[:12]}...")

nouns = ("NOUN", "PROPN")
dict_a = build_dictionary(corpus_a.whole(), nouns)
dict_b = build_dictionary(corpus_b.whole(), nouns)

comparison = compare_ranks(dict_a, dict_b, lexicon, k=20)
print(f"\noverlap: {comparison.overlap} of {comparison.k} top lemmas "
      "have their image in the other side's top table\n")

print(f"{'rank A':>6}  {'lemma A':10s} {'lemma B':10s} {'rank B':>6}")
for row in comparison.pairs:
    ra = "" if row.rank_a is None else row.rank_a
    rb = "" if row.rank_b is None else row.rank_b
    marker = ""
    if row.rank_a is not None and (row.rank_b is None or row.rank_b > comparison.k):
        marker = "   <- no image in top-20"
    print(f"{ra!s:>6}  {row.lemma_a or '':10s} {row.lemma_b or '':10s} {rb!s:>6}{marker}")

"""From annotated text to ranked frequency dictionaries and specificities.

Run with: python demos/01_corpus_and_dictionaries.py
"""

from logometre import build_dictionary, parse_corpus, partition, specificity, top_k

TEXT = """#!logometre v1 lang=fr-demo tags=NOUN,PROPN,VERB,ADJ,DET
#### id=allocution-1 country=FR president=p1 year=1962
Le\tle\tDET
pays\tpays\tNOUN
attend\tattendre\tVERB
la\tle\tDET
paix\tpaix\tNOUN

Les\tle\tDET
Français\tfrançais\tPROPN
construisent\tconstruire\tVERB
le\tle\tDET
pays\tpays\tNOUN
##p
Chaque\tchaque\tDET
année\tannée\tNOUN
compte\tcompter\tVERB

#### id=allocution-2 country=FR president=p2 year=1981
Le\tle\tDET
travail\ttravail\tNOUN
transforme\ttransformer\tVERB
le\tle\tDET
pays\tpays\tNOUN

La\tle\tDET
paix\tpaix\tNOUN
demande\tdemander\tVERB
du\tdu\tDET
travail\ttravail\tNOUN
"""

corpus = parse_corpus(TEXT)
print(f"parsed {len(corpus.documents)} documents, {corpus.token_count} tokens, "
      f"language {corpus.language}")

# the whole corpus, then a single-speaker slice
whole = partition(corpus, {})
p1 = partition(corpus, {"president": "p1"})
print(f"president p1 slice: {p1.document_ids}, {p1.token_count()} tokens")

nouns = ("NOUN", "PROPN")
dictionary = build_dictionary(whole, nouns)
print("\nnoun dictionary (count desc, lemma asc):")
for entry in dictionary.entries:
    print(f"  rank {entry.rank}: {entry.lemma:10s} {entry.count}")

print("\ntop-2 table:", [(e.lemma, e.count) for e in top_k(dictionary, 2)])

# is 'paix' over-represented in p1's speeches relative to the whole corpus?
score = specificity(p1, corpus, "paix", nouns)
print(f"\nspecificity of 'paix' in p1: f={score.part_freq} F={score.corpus_freq} "
      f"t={score.part_size} T={score.corpus_size}")
print(f"  z = {score.z:+.3f}   signed log10 tail = {score.log10p:+.3f} "
      "(positive = over-represented)")

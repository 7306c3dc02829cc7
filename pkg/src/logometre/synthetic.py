"""Deterministic synthetic corpora for tests, demos and benchmarks.

The bilingual pair plants a known structure: each side has 200 noun lemmas
linked 1:1 by the bundled lexicon, the two rank-1 nouns correspond, and
exactly 18 of either side's top-20 nouns have their image inside the other
side's top-20 (the other two fall outside it). Noun token counts are exact
by construction: sentence assembly only groups a fully consumed multiset.

Nouns beyond the generic top ranks are assigned to a handful of "topics";
sentences draw most nouns from a single topic, which plants a blocky
cooccurrence structure that correspondence analysis recovers as separated
lobes around a generic centre.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np


class BilingualFixture(NamedTuple):
    corpus_a: str
    corpus_b: str
    lexicon: str


TAGSET = ("NOUN", "PROPN", "VERB", "ADJ", "ADV", "DET")

_FILLER = [
    ("dire", "VERB"), ("faire", "VERB"), ("aller", "VERB"), ("devoir", "VERB"),
    ("grand", "ADJ"), ("petit", "ADJ"), ("nouveau", "ADJ"),
    ("bien", "ADV"), ("plus", "ADV"),
    ("le", "DET"), ("un", "DET"), ("ce", "DET"),
]


def _rank_count(r: int) -> int:
    return 260 - 7 * (r - 1)


def _tail_count(j: int) -> int:
    return max(3, 80 - (j - 21))


def _side_a_counts(n_vocab=200):
    counts = {}
    for i in range(1, n_vocab + 1):
        counts[i] = _rank_count(i) if i <= 20 else _tail_count(i)
    return counts


def _side_b_counts(n_vocab=200):
    counts = {}
    for i in range(1, n_vocab + 1):
        if i <= 18:
            counts[i] = _rank_count(i)
        elif i == 21:
            counts[i] = _rank_count(19)
        elif i == 22:
            counts[i] = _rank_count(20)
        elif i in (19, 20):
            counts[i] = _tail_count(i + 2)
        else:
            counts[i] = _tail_count(i)
    return counts


def _assemble(language, prefix, counts, propn_indices, seed, n_docs, country,
              n_generic=20, n_topics=4, paragraph_every=9):
    """Emit annotated-TSV text with the exact given per-lemma token counts."""
    rng = np.random.default_rng(seed)
    lemma = {i: f"{prefix}{i:03d}" for i in counts}
    pos_of = {i: ("PROPN" if i in propn_indices else "NOUN") for i in counts}

    generic_pool = []
    topic_pools = [[] for _ in range(n_topics)]
    for i in sorted(counts):
        bucket = generic_pool if i <= n_generic else topic_pools[i % n_topics]
        bucket.extend([i] * counts[i])
    rng.shuffle(generic_pool)
    for pool in topic_pools:
        rng.shuffle(pool)

    sentences = []
    while generic_pool or any(topic_pools):
        cells = []
        sizes = [len(p) for p in topic_pools]
        if any(sizes):
            topic = int(np.argmax(sizes))
            for _ in range(min(3, sizes[topic])):
                cells.append(topic_pools[topic].pop())
        for _ in range(min(2, len(generic_pool))):
            cells.append(generic_pool.pop())
        if not cells:
            break
        for _ in range(int(rng.integers(2, 5))):
            cells.append(-1 - int(rng.integers(0, len(_FILLER))))
        rng.shuffle(cells)
        sentences.append(cells)

    docs = max(1, min(n_docs, len(sentences)))
    per_doc = (len(sentences) + docs - 1) // docs
    presidents = [f"p{d % 4 + 1:02d}" for d in range(docs)]

    lines = [f"#!logometre v1 lang={language} tags={','.join(TAGSET)}"]
    for d in range(docs):
        chunk = sentences[d * per_doc:(d + 1) * per_doc]
        if not chunk:
            break
        year = 1958 + 7 * d
        lines.append(f"#### id={language}-doc{d + 1:02d} country={country} "
                     f"president={presidents[d]} year={year}")
        for s_i, sentence in enumerate(chunk):
            if s_i and s_i % paragraph_every == 0:
                lines.append("##p")
            elif s_i:
                lines.append("")
            for t_i, cell in enumerate(sentence):
                if cell < 0:
                    flemma, fpos = _FILLER[-cell - 1]
                    form = flemma
                    lem = flemma
                    pos = fpos
                else:
                    lem = lemma[cell]
                    form = lem
                    pos = pos_of[cell]
                if t_i == 0:
                    form = form[0].upper() + form[1:]
                lines.append(f"{form}\t{lem}\t{pos}")
        lines.append("")
    return "\n".join(lines) + "\n"


def bilingual_fixture(seed: int = 42) -> BilingualFixture:
    """The bundled two-language fixture with its 200-pair lexicon."""
    counts_a = _side_a_counts()
    counts_b = _side_b_counts()
    corpus_a = _assemble("fr-x-syn", "na", counts_a, propn_indices={3},
                         seed=seed, n_docs=8, country="alpha")
    corpus_b = _assemble("pt-x-syn", "nb", counts_b, propn_indices={4},
                         seed=seed + 1, n_docs=8, country="beta")
    lexicon_lines = ["# synthetic 200-pair lexicon, na### <-> nb###"]
    for i in range(1, 201):
        lexicon_lines.append(f"na{i:03d}\tnb{i:03d}")
    return BilingualFixture(corpus_a, corpus_b, "\n".join(lexicon_lines) + "\n")


def scaled_corpus(seed: int = 7, n_nouns: int = 360, target_tokens: int = 1_000_000,
                  language: str = "xx-scale") -> str:
    """A large single-language corpus for throughput and invariant checks.

    Noun counts follow a shifted-Zipf profile scaled so nouns make up about
    60% of the target token budget; fillers supply the rest during sentence
    assembly, so the total lands near (not exactly on) the target.
    """
    harmonic = sum(1.0 / (r + 10) for r in range(1, n_nouns + 1))
    amplitude = 0.62 * target_tokens / harmonic
    counts = {}
    for r in range(1, n_nouns + 1):
        counts[r] = max(2, int(round(amplitude / (r + 10))))
    return _assemble(language, "nx", counts, propn_indices={5},
                     seed=seed, n_docs=12, country="gamma",
                     n_generic=24, n_topics=4)

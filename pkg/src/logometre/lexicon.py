"""Analyst-supplied bilingual lexicon (lemma_a -> lemma_b translation pairs).

The TSV file carries no language metadata of its own; the declared languages
are supplied by the caller (the CLI infers them from the two corpora). A
lexicon with ``lang_a=None`` matches any language.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

from .corpus import normalize_lemma
from .errors import DuplicateLexiconEntry


@dataclass(frozen=True)
class BilingualLexicon:
    lang_a: Optional[str]
    lang_b: Optional[str]
    pairs: dict          # lemma_a -> lemma_b, both NFC + lowercased
    id: str              # content hash over the sorted pairs

    def translate(self, lemma_a: str) -> Optional[str]:
        return self.pairs.get(normalize_lemma(lemma_a))

    def __len__(self):
        return len(self.pairs)


def make_lexicon(pairs, lang_a=None, lang_b=None) -> BilingualLexicon:
    """Build a lexicon from (lemma_a, lemma_b) pairs; many-to-one allowed."""
    mapping = {}
    for i, (a, b) in enumerate(pairs, start=1):
        a = normalize_lemma(a)
        b = normalize_lemma(b)
        if not a or not b:
            raise ValueError(f"pair {i}: empty lemma")
        if a in mapping:
            raise DuplicateLexiconEntry(a, i)
        mapping[a] = b
    digest = hashlib.sha256(
        "\n".join(f"{a}\t{b}" for a, b in sorted(mapping.items())).encode("utf-8")
    ).hexdigest()
    return BilingualLexicon(lang_a=lang_a, lang_b=lang_b, pairs=mapping, id=digest)


def parse_lexicon(source, lang_a=None, lang_b=None) -> BilingualLexicon:
    """Parse the TSV lexicon format: one pair per line, # comments allowed."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source
    mapping = {}
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise ValueError(f"lexicon line {line_no}: expected lemma_a<TAB>lemma_b")
        a = normalize_lemma(fields[0])
        b = normalize_lemma(fields[1])
        if a in mapping:
            raise DuplicateLexiconEntry(a, line_no)
        mapping[a] = b
    return make_lexicon(mapping.items(), lang_a=lang_a, lang_b=lang_b)


def load_lexicon(path, lang_a=None, lang_b=None) -> BilingualLexicon:
    with open(path, encoding="utf-8") as f:
        return parse_lexicon(f, lang_a=lang_a, lang_b=lang_b)


def identity_lexicon(lemmas, lang_a=None, lang_b=None) -> BilingualLexicon:
    """Maps every lemma to itself; handy for self-comparison runs."""
    return make_lexicon(((l, l) for l in lemmas), lang_a=lang_a, lang_b=lang_b)

"""Cooccurrence contingency matrices and pivot-word profiles.

A "context" is the unit inside which joint presence is counted: a sentence
(default), a paragraph, or a fixed-size token window; contexts never cross
document boundaries. Counting is presence-based: a context contributes at
most 1 to a cell no matter how often the two lemmas repeat inside it, which
keeps cells bounded by the context count and the matrix symmetric.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .corpus import SubCorpus, normalize_lemma
from .dictionary import (
    LOG10P_CAP,
    FrequencyDictionary,
    SourceRef,
    log10_hypergeom_tail,
)
from .errors import PivotAbsent, VocabularyTooSmall

# Below this many contexts the exact hypergeometric tail is cheap enough to
# report next to the z index on every profile entry.
EXACT_TAIL_MAX_CONTEXTS = 10_000


@dataclass(frozen=True)
class ContextSpec:
    unit: str                      # "sentence" | "paragraph" | "window"
    window: Optional[int] = None   # tokens, when unit == "window"
    cross_document: bool = False   # reserved; always False

    def __post_init__(self):
        if self.unit not in ("sentence", "paragraph", "window"):
            raise ValueError(f"unknown context unit {self.unit!r}")
        if self.unit == "window":
            if self.window is None or self.window < 1:
                raise ValueError("window unit requires window >= 1")
        elif self.window is not None:
            raise ValueError(f"window size is only valid with unit='window'")
        if self.cross_document:
            raise ValueError("contexts never cross document boundaries")

    def to_dict(self):
        d = {"unit": self.unit}
        if self.unit == "window":
            d["window"] = self.window
        return d

    @staticmethod
    def from_dict(d) -> "ContextSpec":
        return ContextSpec(unit=d["unit"], window=d.get("window"))


SENTENCE_CONTEXT = ContextSpec("sentence")


def iter_contexts(sub: SubCorpus, context: ContextSpec):
    """Yield one token list per context, in deterministic corpus order."""
    for doc in sub.documents():
        yield from _doc_contexts(doc, context)


class CooccurrenceMatrix:
    """Square symmetric presence-count matrix over a fixed lemma list."""

    def __init__(self, labels, counts, context, source, n_contexts):
        counts = np.asarray(counts, dtype=np.int64)
        if counts.shape != (len(labels), len(labels)):
            raise ValueError("counts shape does not match labels")
        counts.flags.writeable = False
        self.labels = tuple(labels)
        self.counts = counts
        self.context = context
        self.source = source
        self.n_contexts = n_contexts

    def to_dict(self):
        return {
            "labels": list(self.labels),
            "counts": [[int(v) for v in row] for row in self.counts],
            "context": self.context.to_dict(),
            "n_contexts": self.n_contexts,
            "source": self.source.to_dict() if self.source is not None else None,
        }

    @staticmethod
    def from_dict(d) -> "CooccurrenceMatrix":
        return CooccurrenceMatrix(
            labels=d["labels"],
            counts=np.array(d["counts"], dtype=np.int64),
            context=ContextSpec.from_dict(d["context"]),
            source=None,
            n_contexts=d.get("n_contexts", 0),
        )

    def to_csv(self) -> str:
        from .serialize import csv_row
        rows = [csv_row([""] + list(self.labels))]
        for label, row in zip(self.labels, self.counts):
            rows.append(csv_row([label] + [int(v) for v in row]))
        return "\n".join(rows) + "\n"


class PivotEntry(NamedTuple):
    lemma: str
    k: int                      # contexts containing pivot and lemma
    F: int                      # contexts containing lemma
    z: float                    # binomial presence index
    log10p: Optional[float]     # exact signed tail, when contexts are few


@dataclass(frozen=True)
class PivotProfile:
    pivot: str
    context: ContextSpec
    context_count: int          # contexts containing the pivot
    total_contexts: int
    entries: tuple

    def to_dict(self):
        return {
            "pivot": self.pivot,
            "context": self.context.to_dict(),
            "context_count": self.context_count,
            "total_contexts": self.total_contexts,
            "entries": [
                {"lemma": e.lemma, "k": e.k, "F": e.F, "z": e.z, "log10p": e.log10p}
                for e in self.entries
            ],
        }


def select_top_lemmas(dictionary: FrequencyDictionary, n: int):
    """First n lemmas by dictionary rank; the order fixes matrix labeling."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if len(dictionary.entries) < n:
        warnings.warn(
            f"requested {n} lemmas but dictionary has only {len(dictionary.entries)}",
            VocabularyTooSmall,
        )
    return [e.lemma for e in dictionary.entries[:n]]


def _doc_pair_counts(doc, context, index):
    pairs = Counter()
    n_contexts = 0
    for tokens in _doc_contexts(doc, context):
        n_contexts += 1
        present = {index[tok.lemma] for tok in tokens if tok.lemma in index}
        if len(present) > 1:
            ordered = sorted(present)
            for a in range(len(ordered)):
                ia = ordered[a]
                for b in range(a + 1, len(ordered)):
                    pairs[(ia, ordered[b])] += 1
    return pairs, n_contexts


def _doc_contexts(doc, context: ContextSpec):
    if context.unit == "sentence":
        for sentence in doc.sentences:
            yield sentence.tokens
    elif context.unit == "paragraph":
        bucket = []
        current = None
        for sentence in doc.sentences:
            if current is not None and sentence.paragraph != current:
                yield tuple(bucket)
                bucket = []
            current = sentence.paragraph
            bucket.extend(sentence.tokens)
        if bucket:
            yield tuple(bucket)
    else:
        w = context.window
        flat = [tok for sentence in doc.sentences for tok in sentence.tokens]
        for start in range(0, len(flat), w):
            yield tuple(flat[start:start + w])


def build_cooc_matrix(sub: SubCorpus, lemmas, context: ContextSpec = SENTENCE_CONTEXT,
                      workers: int = 1) -> CooccurrenceMatrix:
    """Count, for every lemma pair, the contexts where both are present.

    Lemma presence is lemma-level (any POS). The diagonal is zeroed; absent
    lemmas simply produce zero rows and columns.
    """
    labels = [normalize_lemma(l) for l in lemmas]
    if len(labels) < 2:
        raise ValueError("need at least 2 lemmas")
    if len(set(labels)) != len(labels):
        raise ValueError("lemmas must be distinct")
    index = {lemma: i for i, lemma in enumerate(labels)}

    docs = list(sub.documents())
    if workers > 1 and len(docs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda d: _doc_pair_counts(d, context, index), docs))
    else:
        partials = [_doc_pair_counts(d, context, index) for d in docs]

    n = len(labels)
    counts = np.zeros((n, n), dtype=np.int64)
    n_contexts = 0
    for pairs, doc_contexts in partials:
        n_contexts += doc_contexts
        for (i, j), c in pairs.items():
            counts[i, j] += c
            counts[j, i] += c

    return CooccurrenceMatrix(
        labels=labels,
        counts=counts,
        context=context,
        source=SourceRef.of(sub),
        n_contexts=n_contexts,
    )


def pivot_profile(sub: SubCorpus, pivot: str, context: ContextSpec = SENTENCE_CONTEXT,
                  min_joint: int = 2, pos_filter=None) -> PivotProfile:
    """Rank the lemmas that share contexts with ``pivot`` by significance.

    For each candidate w: k = contexts containing both, m = contexts
    containing the pivot, p = (contexts containing w) / (total contexts),
    z = (k - m*p) / sqrt(m*p*(1-p)). Presence is lemma-level so joint counts
    agree exactly with build_cooc_matrix cells; pos_filter only restricts
    which lemmas are reported. When the context count is small the exact
    hypergeometric tail (signed log10) is reported next to z.
    """
    if min_joint < 1:
        raise ValueError("min_joint must be >= 1")
    pivot = normalize_lemma(pivot)
    wanted = None if pos_filter is None else set(pos_filter)

    presence = Counter()
    joint = Counter()
    candidates = set()
    total_contexts = 0
    pivot_contexts = 0
    for tokens in iter_contexts(sub, context):
        total_contexts += 1
        lemma_set = {tok.lemma for tok in tokens}
        presence.update(lemma_set)
        if wanted is not None:
            candidates.update(tok.lemma for tok in tokens if tok.pos in wanted)
        if pivot in lemma_set:
            pivot_contexts += 1
            joint.update(lemma_set)
    if wanted is None:
        candidates = set(presence.keys())

    if pivot_contexts == 0:
        raise PivotAbsent(pivot)

    m = pivot_contexts
    exact = total_contexts < EXACT_TAIL_MAX_CONTEXTS
    entries = []
    for lemma in candidates:
        if lemma == pivot:
            continue
        k = joint.get(lemma, 0)
        if k < min_joint:
            continue
        F = presence[lemma]
        p = F / total_contexts
        variance = m * p * (1.0 - p)
        z = 0.0 if variance <= 0.0 else (k - m * p) / math.sqrt(variance)
        log10p = None
        if exact:
            if k >= m * p:
                log10p = -log10_hypergeom_tail(total_contexts, F, m, k, upper=True)
            else:
                log10p = log10_hypergeom_tail(total_contexts, F, m, k, upper=False)
            log10p = max(-LOG10P_CAP, min(LOG10P_CAP, log10p))
        entries.append(PivotEntry(lemma, k, F, z, log10p))

    entries.sort(key=lambda e: (-e.z, e.lemma))
    return PivotProfile(
        pivot=pivot,
        context=context,
        context_count=m,
        total_contexts=total_contexts,
        entries=tuple(entries),
    )

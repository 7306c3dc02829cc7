"""POS-filtered frequency dictionaries, rank comparison, lexical specificity.

Counting is lemma-keyed (the POS filter applies upstream, so homographs
inside the filter set collapse). Ranks are deterministic: count descending,
then lemma ascending. Specificity reports both the exact hypergeometric tail
(as a signed log10 probability) and its z-score approximation.
"""

from __future__ import annotations

import hashlib
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .corpus import AnnotatedCorpus, SubCorpus, normalize_lemma
from .errors import LexiconLanguageMismatch
from .lexicon import BilingualLexicon
from .serialize import csv_row

# log10-probability magnitudes are capped here to keep outputs finite.
LOG10P_CAP = 308.0


class FrequencyEntry(NamedTuple):
    lemma: str
    pos: str          # majority POS among the filtered occurrences
    count: int
    rank: int         # 1-based position in (count desc, lemma asc) order


@dataclass(frozen=True)
class SourceRef:
    """Identity of the sub-corpus a result was computed from."""

    language: str
    selector: tuple
    document_count: int
    documents_digest: str

    @staticmethod
    def of(sub: SubCorpus) -> "SourceRef":
        digest = hashlib.sha256("\n".join(sub.document_ids).encode("utf-8")).hexdigest()[:16]
        return SourceRef(
            language=sub.parent.language,
            selector=sub.selector,
            document_count=len(sub.document_ids),
            documents_digest=digest,
        )

    def to_dict(self):
        return {
            "language": self.language,
            "selector": {k: v for k, v in self.selector},
            "document_count": self.document_count,
            "documents_digest": self.documents_digest,
        }


@dataclass(frozen=True)
class FrequencyDictionary:
    source: SourceRef
    pos_filter: tuple
    entries: tuple
    total_filtered_tokens: int

    def rank_of(self, lemma: str) -> Optional[int]:
        return self._index().get(normalize_lemma(lemma))

    def count_of(self, lemma: str) -> int:
        entry_rank = self.rank_of(lemma)
        return 0 if entry_rank is None else self.entries[entry_rank - 1].count

    def _index(self):
        cached = getattr(self, "_rank_index", None)
        if cached is None:
            cached = {e.lemma: e.rank for e in self.entries}
            object.__setattr__(self, "_rank_index", cached)
        return cached


class PairRow(NamedTuple):
    lemma_a: Optional[str]
    rank_a: Optional[int]
    lemma_b: Optional[str]
    rank_b: Optional[int]


@dataclass(frozen=True)
class RankComparison:
    k: int
    overlap: int
    pairs: tuple
    lexicon_id: str

    def to_dict(self):
        return {
            "k": self.k,
            "overlap": self.overlap,
            "lexicon_id": self.lexicon_id,
            "pairs": [
                {"lemma_a": p.lemma_a, "rank_a": p.rank_a,
                 "lemma_b": p.lemma_b, "rank_b": p.rank_b}
                for p in self.pairs
            ],
        }


class SpecificityScore(NamedTuple):
    lemma: str
    part_freq: int     # f: occurrences in the part
    corpus_freq: int   # F: occurrences in the whole
    part_size: int     # t: filtered tokens in the part
    corpus_size: int   # T: filtered tokens in the whole
    z: float
    log10p: float      # signed; positive = over-represented


# --- building and ranking -----------------------------------------------------

def _count_document(doc, wanted):
    lemma_counts = Counter()
    pos_counts = {}
    for sentence in doc.sentences:
        for tok in sentence.tokens:
            if wanted is None or tok.pos in wanted:
                lemma_counts[tok.lemma] += 1
                per_pos = pos_counts.get(tok.lemma)
                if per_pos is None:
                    per_pos = pos_counts[tok.lemma] = Counter()
                per_pos[tok.pos] += 1
    return lemma_counts, pos_counts


def build_dictionary(sub: SubCorpus, pos_filter=None, workers: int = 1) -> FrequencyDictionary:
    """Count filtered lemmas and rank them (count desc, lemma asc).

    Documents may be counted in parallel; partial counts are merged in
    document order so the result is independent of the worker count.
    """
    wanted = None if pos_filter is None else set(pos_filter)
    docs = list(sub.documents())
    if workers > 1 and len(docs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda d: _count_document(d, wanted), docs))
    else:
        partials = [_count_document(d, wanted) for d in docs]

    lemma_counts = Counter()
    pos_counts = {}
    for partial_counts, partial_pos in partials:
        lemma_counts.update(partial_counts)
        for lemma, per_pos in partial_pos.items():
            acc = pos_counts.get(lemma)
            if acc is None:
                pos_counts[lemma] = per_pos.copy()
            else:
                acc.update(per_pos)

    ordered = sorted(lemma_counts.items(), key=lambda item: (-item[1], item[0]))
    entries = tuple(
        FrequencyEntry(
            lemma=lemma,
            pos=sorted(pos_counts[lemma].items(), key=lambda kv: (-kv[1], kv[0]))[0][0],
            count=count,
            rank=i + 1,
        )
        for i, (lemma, count) in enumerate(ordered)
    )
    return FrequencyDictionary(
        source=SourceRef.of(sub),
        pos_filter=tuple(sorted(wanted)) if wanted is not None else (),
        entries=entries,
        total_filtered_tokens=sum(lemma_counts.values()),
    )


def top_k(dictionary: FrequencyDictionary, k: int):
    """First min(k, vocabulary) entries in rank order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return dictionary.entries[:k]


def dictionary_to_csv(dictionary: FrequencyDictionary, limit=None) -> str:
    rows = ["rank,lemma,count,relative_freq_per_10k"]
    total = dictionary.total_filtered_tokens
    for entry in (dictionary.entries if limit is None else dictionary.entries[:limit]):
        rel = 0.0 if total == 0 else entry.count * 10000.0 / total
        rows.append(csv_row([entry.rank, entry.lemma, entry.count, rel]))
    return "\n".join(rows) + "\n"


def dictionary_to_dict(dictionary: FrequencyDictionary, limit=None):
    total = dictionary.total_filtered_tokens
    return {
        "source": dictionary.source.to_dict(),
        "pos_filter": list(dictionary.pos_filter),
        "total_filtered_tokens": total,
        "entries": [
            {
                "rank": e.rank,
                "lemma": e.lemma,
                "pos": e.pos,
                "count": e.count,
                "relative_freq_per_10k": (0.0 if total == 0 else e.count * 10000.0 / total),
            }
            for e in (dictionary.entries if limit is None else dictionary.entries[:limit])
        ],
    }


# --- cross-language rank comparison -------------------------------------------

def compare_ranks(dict_a: FrequencyDictionary, dict_b: FrequencyDictionary,
                  lexicon: BilingualLexicon, k: int) -> RankComparison:
    """Align the two top-k tables through the lexicon.

    ``overlap`` counts top-k lemmas of side A whose lexicon image sits in the
    top-k of side B. With a non-bijective lexicon overlap(A->B) need not
    equal overlap(B->A).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if lexicon.lang_a is not None and dict_a.source.language != lexicon.lang_a:
        raise LexiconLanguageMismatch(
            f"lexicon side A is {lexicon.lang_a!r}, dictionary is {dict_a.source.language!r}")
    if lexicon.lang_b is not None and dict_b.source.language != lexicon.lang_b:
        raise LexiconLanguageMismatch(
            f"lexicon side B is {lexicon.lang_b!r}, dictionary is {dict_b.source.language!r}")

    top_a = top_k(dict_a, k)
    top_b = top_k(dict_b, k)
    top_b_lemmas = {e.lemma for e in top_b}

    rows = []
    overlap = 0
    covered_b = set()
    for entry in top_a:
        image = lexicon.translate(entry.lemma)
        if image is None:
            rows.append(PairRow(entry.lemma, entry.rank, None, None))
            continue
        rank_b = dict_b.rank_of(image)
        rows.append(PairRow(entry.lemma, entry.rank, image, rank_b))
        if image in top_b_lemmas:
            overlap += 1
            covered_b.add(image)
    for entry in top_b:
        if entry.lemma not in covered_b:
            rows.append(PairRow(None, None, entry.lemma, entry.rank))

    return RankComparison(k=k, overlap=overlap, pairs=tuple(rows), lexicon_id=lexicon.id)


# --- lexical specificity -------------------------------------------------------

def _ln_choose(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def log10_hypergeom_tail(T: int, F: int, t: int, f: int, upper: bool) -> float:
    """log10 of P(X >= f) (upper) or P(X <= f) (lower) for X ~ Hypergeom(T, F, t).

    X counts marked items in a draw of t from a population of T containing F
    marked items. Computed by anchoring the probability mass at f with
    log-gamma and accumulating the tail through the term-ratio recurrence;
    all terms are positive, so no cancellation occurs. Returns -inf for an
    empty tail.
    """
    if not (0 <= F <= T and 0 <= t <= T):
        raise ValueError(f"invalid hypergeometric parameters T={T} F={F} t={t}")
    lo = max(0, t - (T - F))
    hi = min(F, t)
    if upper:
        if f <= lo:
            return 0.0
        if f > hi:
            return -math.inf
    else:
        if f >= hi:
            return 0.0
        if f < lo:
            return -math.inf

    ln_pmf_f = (_ln_choose(F, f) + _ln_choose(T - F, t - f) - _ln_choose(T, t))
    acc = 1.0
    term = 1.0
    if upper:
        k = f
        while k < hi:
            # pmf(k+1) / pmf(k)
            ratio = ((F - k) * (t - k)) / ((k + 1.0) * (T - F - t + k + 1.0))
            term *= ratio
            acc += term
            k += 1
            if ratio < 1.0 and term < acc * 1e-18:
                break
    else:
        k = f
        while k > lo:
            # pmf(k-1) / pmf(k)
            ratio = (k * (T - F - t + k)) / ((F - k + 1.0) * (t - k + 1.0))
            term *= ratio
            acc += term
            k -= 1
            if ratio < 1.0 and term < acc * 1e-18:
                break
    return (ln_pmf_f + math.log(acc)) / math.log(10.0)


def specificity_from_counts(lemma: str, f: int, F: int, t: int, T: int) -> SpecificityScore:
    """Score over/under-representation of a lemma seen f times in a part.

    z uses the hypergeometric mean and variance; log10p is the exact tail,
    signed so that positive means over-represented. Degenerate distributions
    (T, F or t zero, or part = whole) score neutral rather than failing.
    """
    if not (0 <= f <= min(F, t) and F <= T and t <= T):
        raise ValueError(f"inconsistent counts f={f} F={F} t={t} T={T}")
    if T == 0 or F == 0 or t == 0 or t == T or F == T:
        return SpecificityScore(lemma, f, F, t, T, 0.0, 0.0)

    expected = t * F / T
    variance = t * (F / T) * (1.0 - F / T) * (T - t) / (T - 1.0)
    z = 0.0 if variance <= 0.0 else (f - expected) / math.sqrt(variance)

    if f >= expected:
        log10p = -log10_hypergeom_tail(T, F, t, f, upper=True)
    else:
        log10p = log10_hypergeom_tail(T, F, t, f, upper=False)
    if log10p > LOG10P_CAP:
        log10p = LOG10P_CAP
    elif log10p < -LOG10P_CAP:
        log10p = -LOG10P_CAP
    # -0.0 would serialize as 0 anyway; normalize for consistency
    if log10p == 0.0:
        log10p = 0.0
    return SpecificityScore(lemma, f, F, t, T, z, log10p)


def specificity(sub: SubCorpus, whole: AnnotatedCorpus, lemma: str,
                pos_filter=None) -> SpecificityScore:
    """Specificity of ``lemma`` in ``sub`` against the whole corpus."""
    if sub.parent is not whole:
        raise ValueError("sub-corpus must be a partition of the given corpus")
    lemma = normalize_lemma(lemma)
    part_dict = build_dictionary(sub, pos_filter)
    whole_dict = build_dictionary(whole.whole(), pos_filter)
    return specificity_from_counts(
        lemma,
        f=part_dict.count_of(lemma),
        F=whole_dict.count_of(lemma),
        t=part_dict.total_filtered_tokens,
        T=whole_dict.total_filtered_tokens,
    )

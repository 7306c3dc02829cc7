"""logometre: logometric comparison of non-aligned bilingual corpora.

The pipeline runs from pre-annotated text to frequency dictionaries, rank
alignments through a bilingual lexicon, cooccurrence contingency matrices,
correspondence-analysis factor maps and pivot-word profiles, with paired
machine-readable reports and an HTTP explorer on top.
"""

from .ca import (
    CaSolution,
    IsotopyClustering,
    cluster_isotopies,
    correspondence_analysis,
    project,
)
from .cooccurrence import (
    ContextSpec,
    CooccurrenceMatrix,
    PivotProfile,
    build_cooc_matrix,
    iter_contexts,
    pivot_profile,
    select_top_lemmas,
)
from .corpus import (
    AnnotatedCorpus,
    Document,
    Sentence,
    SubCorpus,
    Token,
    load_corpus,
    parse_corpus,
    partition,
    serialize_corpus,
    token_stream,
)
from .dictionary import (
    FrequencyDictionary,
    FrequencyEntry,
    RankComparison,
    SpecificityScore,
    build_dictionary,
    compare_ranks,
    specificity,
    specificity_from_counts,
    top_k,
)
from .lexicon import BilingualLexicon, identity_lexicon, load_lexicon, make_lexicon, parse_lexicon
from .report import ComparisonReport, ReportConfig, build_report, render_report

__version__ = "0.1.0"

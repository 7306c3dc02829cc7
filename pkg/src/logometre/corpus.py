"""Annotated corpus model and the annotated-TSV interchange format.

The package does not tokenize, lemmatize or tag anything itself: it consumes
text that external tools have already annotated, one token per line as
``form<TAB>lemma<TAB>pos``. The file layout is:

    #!logometre v1 lang=<tag> tags=<comma-separated POS list>
    #### id=<string> key=value [key=value ...]
    ##p                      (optional paragraph marker)
    form<TAB>lemma<TAB>pos
    <blank line>             (sentence boundary)

Lemmas are NFC-normalized and lowercased at parse time; the surface form
keeps its case. A parsed corpus is immutable and safe to share across
threads.
"""

from __future__ import annotations

import io
import re
import unicodedata
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import (
    DuplicateDocumentId,
    EmptyDocument,
    LanguageMismatch,
    MalformedLine,
    UnknownMetadataKey,
)

MANIFEST_PREFIX = "#!logometre v1"
DOC_HEADER_PREFIX = "####"
PARAGRAPH_MARKER = "##p"

# Default set of tags treated as "substantives" (nouns). Proper nouns are
# included by default; the filter is configurable everywhere it is used.
DEFAULT_NOUN_TAGS = ("NOUN", "PROPN")

_KEYVAL_RE = re.compile(r'([^\s="]+)=(?:"([^"]*)"|(\S+))')


def normalize_lemma(lemma: str) -> str:
    """NFC normalization + lowercasing, the comparison key for all counting."""
    return unicodedata.normalize("NFC", lemma).lower()


class Token(NamedTuple):
    form: str
    lemma: str
    pos: str


class Sentence(NamedTuple):
    tokens: tuple
    paragraph: int


@dataclass(frozen=True)
class Document:
    id: str
    metadata: dict
    sentences: tuple

    def token_count(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)


@dataclass(frozen=True)
class AnnotatedCorpus:
    documents: tuple
    token_count: int
    language: str
    tagset: tuple

    def document_ids(self):
        return tuple(d.id for d in self.documents)

    def whole(self) -> "SubCorpus":
        """The corpus as a SubCorpus (empty selector matches everything)."""
        return partition(self, {})


@dataclass(frozen=True)
class SubCorpus:
    """A metadata-selected slice of a corpus; documents keep corpus order."""

    parent: AnnotatedCorpus
    selector: tuple          # sorted (key, value) pairs
    document_ids: tuple

    def documents(self) -> Iterator[Document]:
        wanted = set(self.document_ids)
        for doc in self.parent.documents:
            if doc.id in wanted:
                yield doc

    def token_count(self) -> int:
        return sum(d.token_count() for d in self.documents())

    def selector_dict(self) -> dict:
        return dict(self.selector)


# --- parsing ----------------------------------------------------------------

def _parse_manifest(line: str, line_no: int):
    rest = line[len(MANIFEST_PREFIX):].strip()
    pairs = dict()
    pos = 0
    for m in _KEYVAL_RE.finditer(rest):
        if rest[pos:m.start()].strip() or m.group(1) in pairs:
            raise MalformedLine(line_no, "manifest must declare lang=<tag> tags=<list>")
        pairs[m.group(1)] = m.group(2) if m.group(2) is not None else m.group(3)
        pos = m.end()
    if rest[pos:].strip() or "lang" not in pairs or "tags" not in pairs:
        raise MalformedLine(line_no, "manifest must declare lang=<tag> tags=<list>")
    language = pairs["lang"]
    tagset = tuple(t for t in pairs["tags"].split(",") if t)
    if not language or not tagset:
        raise MalformedLine(line_no, "manifest lang and tags must be non-empty")
    return language, tagset


def _parse_doc_header(line: str, line_no: int):
    rest = line[len(DOC_HEADER_PREFIX):].strip()
    pairs = []
    pos = 0
    for m in _KEYVAL_RE.finditer(rest):
        if rest[pos:m.start()].strip():
            raise MalformedLine(line_no, f"unparsable header fragment {rest[pos:m.start()]!r}")
        value = m.group(2) if m.group(2) is not None else m.group(3)
        pairs.append((m.group(1), value))
        pos = m.end()
    if rest[pos:].strip():
        raise MalformedLine(line_no, f"unparsable header fragment {rest[pos:]!r}")
    if not pairs or pairs[0][0] != "id":
        raise MalformedLine(line_no, "document header must start with id=<string>")
    doc_id = pairs[0][1]
    if not doc_id:
        raise MalformedLine(line_no, "document id must be non-empty")
    metadata = {}
    for key, value in pairs[1:]:
        if key in metadata:
            raise MalformedLine(line_no, f"metadata key {key!r} repeated")
        metadata[key] = value
    return doc_id, metadata


def parse_corpus(source, language: Optional[str] = None) -> AnnotatedCorpus:
    """Parse annotated-TSV input into an AnnotatedCorpus.

    ``source`` is a text stream, an iterable of lines, or a string. A fully
    empty input yields an empty corpus. When ``language`` is given it is
    checked against the manifest.
    """
    if isinstance(source, str):
        lines = io.StringIO(source)
    else:
        lines = source

    documents = []
    seen_ids = set()
    tagset: tuple = ()
    tag_lookup: set = set()
    manifest_lang = None

    doc_id = None
    doc_meta = None
    doc_sentences = None
    current_tokens = []
    paragraph = 0
    total_tokens = 0

    def close_sentence():
        nonlocal current_tokens
        if current_tokens:
            doc_sentences.append(Sentence(tuple(current_tokens), paragraph))
            current_tokens = []

    def close_document():
        nonlocal doc_id, doc_meta, doc_sentences, paragraph
        if doc_id is None:
            return
        close_sentence()
        if not doc_sentences:
            raise EmptyDocument(doc_id)
        documents.append(Document(doc_id, doc_meta, tuple(doc_sentences)))
        doc_id = None
        doc_meta = None
        doc_sentences = None
        paragraph = 0

    line_no = 0
    for raw in lines:
        line_no += 1
        line = raw.rstrip("\n").rstrip("\r")
        if manifest_lang is None:
            if not line.strip():
                continue
            if not line.startswith(MANIFEST_PREFIX):
                raise MalformedLine(line_no, f"first content line must start with {MANIFEST_PREFIX!r}")
            manifest_lang, tagset = _parse_manifest(line, line_no)
            tag_lookup = set(tagset)
            continue
        if line.startswith(DOC_HEADER_PREFIX):
            close_document()
            new_id, new_meta = _parse_doc_header(line, line_no)
            if new_id in seen_ids:
                raise DuplicateDocumentId(new_id, line_no)
            seen_ids.add(new_id)
            doc_id, doc_meta, doc_sentences = new_id, new_meta, []
            continue
        if line == PARAGRAPH_MARKER:
            if doc_id is None:
                raise MalformedLine(line_no, "paragraph marker outside any document")
            close_sentence()
            paragraph += 1
            continue
        if not line.strip():
            close_sentence()
            continue
        if line.startswith("#"):
            raise MalformedLine(line_no, f"unrecognized directive {line.split()[0]!r}")
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLine(line_no, f"expected 3 tab-separated fields, got {len(fields)}")
        form, lemma, pos = fields
        if not form or not lemma or not pos:
            raise MalformedLine(line_no, "form, lemma and pos must be non-empty")
        if doc_id is None:
            raise MalformedLine(line_no, "token line outside any document")
        if pos not in tag_lookup:
            raise MalformedLine(line_no, f"POS tag {pos!r} not in the manifest tagset")
        current_tokens.append(
            Token(unicodedata.normalize("NFC", form), normalize_lemma(lemma), pos)
        )
        total_tokens += 1

    close_document()

    if manifest_lang is None:
        if documents:
            raise MalformedLine(1, "missing manifest line")
        manifest_lang = language or ""
    if language is not None and manifest_lang != language:
        raise LanguageMismatch(language, manifest_lang)

    return AnnotatedCorpus(
        documents=tuple(documents),
        token_count=total_tokens,
        language=manifest_lang,
        tagset=tagset,
    )


def load_corpus(path, language: Optional[str] = None) -> AnnotatedCorpus:
    with open(path, encoding="utf-8") as f:
        return parse_corpus(f, language=language)


# --- serialization (round-trip partner of parse_corpus) ----------------------

def _format_value(value: str) -> str:
    if '"' in value:
        raise ValueError(f"metadata value may not contain a double quote: {value!r}")
    if value == "" or any(c.isspace() for c in value):
        return f'"{value}"'
    return value


def serialize_corpus(corpus: AnnotatedCorpus) -> str:
    """Render a corpus back to the annotated-TSV format."""
    out = []
    if corpus.documents or corpus.language or corpus.tagset:
        out.append(f"{MANIFEST_PREFIX} lang={corpus.language} tags={','.join(corpus.tagset)}")
    for doc in corpus.documents:
        header = [f"{DOC_HEADER_PREFIX} id={_format_value(doc.id)}"]
        for key, value in doc.metadata.items():
            header.append(f"{key}={_format_value(value)}")
        out.append(" ".join(header))
        current_par = 0
        for i, sentence in enumerate(doc.sentences):
            while current_par < sentence.paragraph:
                out.append(PARAGRAPH_MARKER)
                current_par += 1
            if i and out[-1] != PARAGRAPH_MARKER:
                out.append("")
            for tok in sentence.tokens:
                out.append(f"{tok.form}\t{tok.lemma}\t{tok.pos}")
        out.append("")
    return "\n".join(out) + ("\n" if out else "")


# --- partitioning and streaming ----------------------------------------------

def partition(corpus: AnnotatedCorpus, selector) -> SubCorpus:
    """Select the documents whose metadata matches every key=value pair.

    An empty selector matches the whole corpus. A selector key that appears
    in no document at all raises UnknownMetadataKey; an empty match is fine.
    """
    selector = dict(selector)
    known_keys = set()
    for doc in corpus.documents:
        known_keys.update(doc.metadata.keys())
    for key in selector:
        if key not in known_keys:
            raise UnknownMetadataKey(key)
    matched = tuple(
        doc.id
        for doc in corpus.documents
        if all(doc.metadata.get(k) == v for k, v in selector.items())
    )
    return SubCorpus(
        parent=corpus,
        selector=tuple(sorted(selector.items())),
        document_ids=matched,
    )


def token_stream(sub: SubCorpus, pos_filter=None):
    """Yield (doc_id, sentence_index, Token) in deterministic corpus order."""
    wanted = None if pos_filter is None else set(pos_filter)
    for doc in sub.documents():
        for s_idx, sentence in enumerate(doc.sentences):
            for tok in sentence.tokens:
                if wanted is None or tok.pos in wanted:
                    yield doc.id, s_idx, tok

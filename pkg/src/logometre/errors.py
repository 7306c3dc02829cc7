"""Exception hierarchy shared across the package.

Every data-level failure raises a subclass of :class:`LogometreError`, so the
CLI can map them to exit code 2 and print the class name on stderr.
"""


class LogometreError(Exception):
    """Base class for all data errors raised by this package."""


# --- corpus parsing ---------------------------------------------------------

class MalformedLine(LogometreError):
    """A line of the annotated-TSV format does not match the grammar."""

    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class DuplicateDocumentId(LogometreError):
    def __init__(self, doc_id, line_no):
        self.doc_id = doc_id
        self.line_no = line_no
        super().__init__(f"line {line_no}: duplicate document id {doc_id!r}")


class EmptyDocument(LogometreError):
    def __init__(self, doc_id):
        self.doc_id = doc_id
        super().__init__(f"document {doc_id!r} has a header but no tokens")


class LanguageMismatch(LogometreError):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f"expected language {expected!r}, manifest declares {found!r}")


class UnknownMetadataKey(LogometreError):
    def __init__(self, key):
        self.key = key
        super().__init__(f"selector key {key!r} appears in no document's metadata")


# --- bilingual lexicon ------------------------------------------------------

class DuplicateLexiconEntry(LogometreError):
    def __init__(self, lemma, line_no):
        self.lemma = lemma
        self.line_no = line_no
        super().__init__(f"line {line_no}: source lemma {lemma!r} mapped twice")


class LexiconLanguageMismatch(LogometreError):
    def __init__(self, detail):
        super().__init__(detail)


# --- cooccurrence / pivot ---------------------------------------------------

class PivotAbsent(LogometreError):
    def __init__(self, pivot):
        self.pivot = pivot
        super().__init__(f"no context contains the pivot lemma {pivot!r}")


# --- correspondence analysis ------------------------------------------------

class ZeroMatrix(LogometreError):
    def __init__(self):
        super().__init__("contingency matrix has a zero grand total")


class AxisOutOfRange(LogometreError):
    def __init__(self, axis, k_max):
        self.axis = axis
        self.k_max = k_max
        super().__init__(f"axis {axis} outside 1..{k_max}")


class TooFewPoints(LogometreError):
    def __init__(self, n_points, k):
        super().__init__(f"cannot form {k} clusters from {n_points} points")


# --- report / service -------------------------------------------------------

class ParameterMismatch(LogometreError):
    def __init__(self, detail):
        super().__init__(detail)


class CorpusHashMismatch(LogometreError):
    def __init__(self, path):
        self.path = path
        super().__init__(f"corpus file {path} does not match the hash recorded in the report")


class VocabularyTooSmall(UserWarning):
    """Warning (not an error): fewer lemmas available than requested."""

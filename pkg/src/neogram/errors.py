"""Exception hierarchy shared across the package."""


class NeogramError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRegex(NeogramError):
    """A stochastic regular expression violates its probability invariants."""


class BadWeights(NeogramError):
    """Interpolation weights are negative or do not sum to 1."""


class EmptyCorpus(NeogramError):
    """An operation requiring at least one item received none."""


class EmptyLabel(NeogramError):
    """The reference string of a metric computation is empty."""


class EmptyWord(NeogramError):
    """A generator was given an empty word."""


class EmptyLexicon(NeogramError):
    """A lexicon-consuming operation received an empty lexicon."""


class InsufficientLexicon(NeogramError):
    """The frequency list has fewer entries than the requested top-k."""


class CorpusFormatError(NeogramError):
    """A corpus or lexicon file could not be parsed.

    ``line`` is the 1-based line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ParseError(CorpusFormatError):
    pass


class DuplicateIdError(CorpusFormatError):
    def __init__(self, record_id: str, line: int | None = None):
        super().__init__(f"duplicate record id {record_id!r}", line)
        self.record_id = record_id


class EmptyLabelError(CorpusFormatError):
    def __init__(self, line: int | None = None):
        super().__init__("record has an empty label", line)

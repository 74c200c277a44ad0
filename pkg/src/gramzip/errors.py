"""Exception types shared across the toolkit."""


class GramzipError(Exception):
    """Base class for all toolkit errors."""


class MalformedParse(GramzipError):
    """A token stream violates the parse invariants or its file format."""


class MalformedGrammar(GramzipError):
    """A grammar violates its structural invariants or its file format."""


class CyclicGrammar(GramzipError):
    """A grammar's nonterminal reference graph contains a cycle."""


class EmptyInput(GramzipError):
    """An operation that needs at least one byte was given none."""


class AlignmentError(GramzipError):
    """A copy phrase's source range does not line up with whole phrases."""


class ShapeError(GramzipError):
    """A grammar rule has a shape the operation cannot handle."""


class BadBase(GramzipError):
    """Block-structure base must be an integer >= 2."""


class MalformedBlocks(GramzipError):
    """A block structure violates its invariants or its file format."""


class OutOfRange(GramzipError):
    """A position or range lies outside the text."""


class TooLarge(GramzipError):
    """Input exceeds the hard size cap of an exhaustive-search oracle."""

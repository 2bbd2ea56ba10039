"""Binary words over the alphabet {0, 1}."""

from __future__ import annotations

__all__ = ["Word", "WordError", "parse_word", "EMPTY"]

_ALPHABET = frozenset("01")
_FLIP = str.maketrans("01", "10")


class WordError(ValueError):
    """Raised when text cannot be read as a binary word."""


class Word(str):
    """An immutable binary word; also a plain ``str`` of ``'0'``/``'1'``.

    Every ``str`` operation works as usual: ``len``, indexing, slicing,
    ``in`` for factor containment, ``+`` for concatenation.  Slices and
    concatenations come back as plain strings; re-wrap with ``Word`` where
    a validated word is needed.  Construction rejects any character other
    than ``'0'`` and ``'1'``, naming the offending position.
    """

    __slots__ = ()

    def __new__(cls, text: str = "") -> "Word":
        if type(text) is Word:
            return text
        if not isinstance(text, str):
            raise TypeError(f"expected str, got {type(text).__name__}")
        if not _ALPHABET.issuperset(text):
            bad = next(i for i, ch in enumerate(text) if ch not in _ALPHABET)
            raise WordError(f"invalid symbol {text[bad]!r} at index {bad}")
        return super().__new__(cls, text)

    def complement(self) -> "Word":
        """Flip every symbol (0 <-> 1)."""
        return Word(str.translate(self, _FLIP))

    def reverse(self) -> "Word":
        """Symbols in reverse order."""
        return Word(self[::-1])


EMPTY = Word("")


def parse_word(text: str) -> Word:
    """Read ASCII '0'/'1' text (no separators) as a word."""
    return Word(text)

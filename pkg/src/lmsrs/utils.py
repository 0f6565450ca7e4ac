"""lm-srs Utility Functions."""

import hashlib
import itertools
from collections.abc import Iterable, Iterator


def words_of_length(symbols: Iterable[str], length: int) -> Iterator[str]:
    """Yield every word of exactly `length` symbols, lexicographically by precedence.

    `symbols` must already be in precedence order (as [Alphabet.symbols][src.lmsrs.core.models.Alphabet] is),
    so the words come out in the same order the short-lex ordering puts them in.

    Args:
        symbols (Iterable[str]): The alphabet in ascending precedence.
        length (int): Word length, `0` yields only the empty word.
    """
    for letters in itertools.product(tuple(symbols), repeat=length):
        yield "".join(letters)


def shortlex_words(symbols: Iterable[str], max_length: int, min_length: int = 0) -> Iterator[str]:
    """Yield every word with `min_length <= len(word) <= max_length` in short-lex order.

    ???+ tip

        The enumeration is exhaustive, so keep `len(symbols) ** max_length` small. The oracle and the test suite
        scale their bounds to the alphabet for exactly this reason.

    Args:
        symbols (Iterable[str]): The alphabet in ascending precedence.
        max_length (int): Longest word to yield.
        min_length (int, optional): Shortest word to yield. Defaults to 0.
    """
    ordered = tuple(symbols)
    for length in range(min_length, max_length + 1):
        yield from words_of_length(ordered, length)


def digest(*parts: str) -> str:
    """Return the SHA-256 hex digest of `parts`, joined with NUL separators."""
    return hashlib.sha256("\0".join(parts).encode()).hexdigest()

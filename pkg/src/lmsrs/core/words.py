"""Word Utilities: the short-lex order, overlaps and the monadic-term reading of a string."""

from lmsrs.core.models import Alphabet, Ordering


def shortlex_key(word: str, alphabet: Alphabet) -> tuple[int, tuple[int, ...]]:
    """Sort key realising the short-lex order ≻_L: length first, then precedence ranks left to right.

    Raises:
        SrsInputError: If `word` has a symbol outside `alphabet`.
    """
    return len(word), alphabet.ranks(word)


def compare_shortlex(a: str, b: str, alphabet: Alphabet) -> Ordering:
    """Compare two words in the short-lex order.

    The shorter word is less. Words of equal length compare lexicographically by precedence rank, the
    leftmost differing position decides.

    Args:
        a (str): Left operand.
        b (str): Right operand.
        alphabet (Alphabet): Supplies the precedence.

    Raises:
        SrsInputError: If either word has a symbol outside `alphabet`.

    Returns:
        (Ordering): `LESS`, `EQUAL` or `GREATER`.
    """
    key_a, key_b = shortlex_key(a, alphabet), shortlex_key(b, alphabet)
    if key_a < key_b:
        return Ordering.LESS
    if key_a > key_b:
        return Ordering.GREATER
    return Ordering.EQUAL


def overlaps(u: str, v: str) -> bool:
    """Whether some non-empty *proper* suffix of `u` is a prefix of `v`.

    ???+ note

        The relation is directional: `aba` overlaps with `acc` (suffix `a`), but not with `cca`.
        A word of length one has no non-empty proper suffix and overlaps with nothing.
    """
    return any(v.startswith(u[start:]) for start in range(1, len(u)))


def to_monadic_term(word: str, variable: str = "x") -> str:
    """Render `word` as a term over monadic function symbols.

    The first symbol is applied innermost, so `gh` reads as `h(g(x))` and λ as the bare variable.
    """
    term = variable
    for symbol in word:
        term = f"{symbol}({term})"
    return term

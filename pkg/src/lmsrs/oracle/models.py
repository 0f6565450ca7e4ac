"""Oracle Models."""

from pydantic import PositiveInt

from lmsrs.core.models import SrsModel


class SearchBudget(SrsModel):
    """Bounds of a brute-force search.

    Attributes:
        max_word_length (int): Longest enumerated word (`w` for caps, each of `x` and `y` for collapses).
        max_rewrite_steps (int): Deepest rewrite sequence explored by the normal-form search.
    """

    max_word_length: PositiveInt = 6
    max_rewrite_steps: PositiveInt = 64


class NormalFormSearch(SrsModel):
    """Irreducible descendants of a word.

    Attributes:
        normal_forms (frozenset[str]): Those found within the step budget.
        complete (bool): `False` when some word at the step bound was still reducible, so more normal forms may
            exist beyond it.
    """

    normal_forms: frozenset[str]
    complete: bool

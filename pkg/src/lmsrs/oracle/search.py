"""Brute-force ground truth: exhaustive rewriting and bounded enumeration.

Nothing here shares code with the decision procedures beyond [`normalize`][src.lmsrs.core.rewriting.], so the
two can be compared.
"""

import logging

from lmsrs.core.models import RewriteSystem
from lmsrs.core.rewriting import is_irreducible, normalize
from lmsrs.oracle.models import NormalFormSearch, SearchBudget
from lmsrs.utils import shortlex_words, words_of_length

logger = logging.getLogger(__name__)


def one_step_reducts(system: RewriteSystem, word: str) -> list[str]:
    """Every word reachable from `word` in one step, at any position and by any rule, without repeats."""
    reducts: dict[str, None] = {}
    for rule in system.rules:
        start = word.find(rule.lhs)
        while start != -1:
            reducts[word[:start] + rule.rhs + word[start + len(rule.lhs) :]] = None
            start = word.find(rule.lhs, start + 1)
    return list(reducts)


def all_normal_forms(system: RewriteSystem, word: str, budget: SearchBudget | None = None) -> NormalFormSearch:
    """Collect the irreducible descendants of `word` by breadth-first search over every rewrite.

    No termination evidence is needed; the search stops at `budget.max_rewrite_steps`.

    Args:
        system (RewriteSystem): The system.
        word (str): Start word.
        budget (SearchBudget, optional): Step bound. Defaults to `SearchBudget()`.

    Raises:
        SrsInputError: If `word` has a symbol outside the alphabet.

    Returns:
        (NormalFormSearch): The normal forms found, and whether the search ran to completion.
    """
    budget = budget or SearchBudget()
    seen = {system.check_word(word)}
    frontier = [word]
    normal_forms: set[str] = set()
    complete = True
    for depth in range(budget.max_rewrite_steps + 1):
        following = []
        for current in frontier:
            reducts = one_step_reducts(system, current)
            if not reducts:
                normal_forms.add(current)
            elif depth == budget.max_rewrite_steps:
                complete = False
            else:
                following.extend(reduct for reduct in reducts if reduct not in seen)
                seen.update(reducts)
        frontier = following
        if not frontier:
            break
    return NormalFormSearch(normal_forms=frozenset(normal_forms), complete=complete)


def brute_force_cap(system: RewriteSystem, u: str, v: str, budget: SearchBudget | None = None) -> str | None:
    """Enumerate non-empty `w` in short-lex order up to `budget.max_word_length` until `ρ(u·w) = v`.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.

    Returns:
        (str): The first, hence short-lex least, cap term.
        (None): If there is none within the bound.
    """
    budget = budget or SearchBudget()
    for w in shortlex_words(system.alphabet.symbols, budget.max_word_length, min_length=1):
        if normalize(system, u + w) == v:
            logger.debug("Oracle cap for u=%r, v=%r: %r", u, v, w)
            return w
    return None


def cap_terms(system: RewriteSystem, u: str, budget: SearchBudget | None = None) -> dict[str, str]:
    """Map every normal form `ρ(u·w)`, `1 ≤ |w| ≤ budget.max_word_length`, to the short-lex least such `w`.

    Words are extended one symbol at a time through `ρ(u·w·c) = ρ(ρ(u·w)·c)`, so the system must be confluent.
    Of the words of one length that share a normal form only the least is extended. One call answers
    [`brute_force_cap`][(m).] for every `v` at once.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.
    """
    budget = budget or SearchBudget()
    symbols = system.alphabet.symbols
    terms: dict[str, str] = {}
    layer = {normalize(system, u): ""}
    for _ in range(budget.max_word_length):
        following: dict[str, str] = {}
        for normal_form, w in layer.items():
            for symbol in symbols:
                following.setdefault(normalize(system, normal_form + symbol), w + symbol)
        for normal_form, w in following.items():
            terms.setdefault(normal_form, w)
        layer = following
    logger.debug("Oracle caps for u=%r: %d normal forms within length %d", u, len(terms), budget.max_word_length)
    return terms


def brute_force_collapse(system: RewriteSystem, budget: SearchBudget | None = None) -> tuple[str, str] | None:
    """Search for an irreducible `x` and a non-empty `y` with `ρ(x·y) = x`.

    Pairs are tried by increasing `|x| + |y|`, then increasing `|x|`, then short-lex order of `x` and `y`.
    Both lengths are bounded by `budget.max_word_length`.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.

    Returns:
        (tuple[str, str]): The first pair found.
        (None): If there is none within the bound.
    """
    budget = budget or SearchBudget()
    bound = budget.max_word_length
    symbols = system.alphabet.symbols
    irreducible = {
        length: [x for x in words_of_length(symbols, length) if is_irreducible(system, x)]
        for length in range(bound + 1)
    }
    for total in range(1, 2 * bound + 1):
        for x_length in range(max(0, total - bound), min(total - 1, bound) + 1):
            for x in irreducible[x_length]:
                for y in words_of_length(symbols, total - x_length):
                    if normalize(system, x + y) == x:
                        logger.debug("Oracle collapse: x=%r, y=%r", x, y)
                        return x, y
    return None

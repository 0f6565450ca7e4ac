"""Rewriting primitives: irreducibility, leftmost innermost redexes, leftmost-largest steps and normal forms."""

import functools
import logging

from lmsrs.core.models import DecompositionStep, RedexSplit, RewriteSystem
from lmsrs.core.words import shortlex_key
from lmsrs.evidence.providers import require_termination
from lmsrs.exceptions import SrsPreconditionError
from lmsrs.matcher.automaton import advance, build_matcher, first_match, scan

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=128)
def preferred_rules(system: RewriteSystem) -> dict[str, int]:
    """Map each left-hand side to the rule a leftmost-largest step applies to it.

    Among rules sharing a lhs that is the one whose rhs is least in the short-lex order.
    """
    preferred: dict[str, int] = {}
    for index, rule in enumerate(system.rules):
        current = preferred.get(rule.lhs)
        if current is None or shortlex_key(rule.rhs, system.alphabet) < shortlex_key(
            system.rules[current].rhs,
            system.alphabet,
        ):
            preferred[rule.lhs] = index
    return preferred


def is_irreducible(system: RewriteSystem, word: str) -> bool:
    """Whether no left-hand side of `system` occurs in `word`.

    Raises:
        SrsInputError: If `word` has a symbol outside the alphabet.
    """
    return first_match(build_matcher(system), word) is None


def leftmost_innermost_redex(system: RewriteSystem, word: str) -> RedexSplit | None:
    """Split the shortest reducible prefix of `word` into its s-part and l-part.

    The l-part is the longest left-hand side ending where that prefix ends, and the s-part everything in
    front of it (irreducible, since no shorter prefix is reducible).

    Args:
        system (RewriteSystem): The system.
        word (str): Word to scan.

    Raises:
        SrsInputError: If `word` has a symbol outside the alphabet.

    Returns:
        (RedexSplit): The split, if `word` is reducible.
        (None): If `word` is irreducible.
    """
    automaton = build_matcher(system)
    found = first_match(automaton, word)
    if found is None:
        return None
    end, match = found
    lhs = automaton.patterns[match]
    return RedexSplit(
        s_part=word[: end - len(lhs)],
        l_part=lhs,
        rule_index=preferred_rules(system)[lhs],
        end_position=end,
    )


def ll_step(system: RewriteSystem, word: str) -> str | None:
    """Apply one leftmost-largest step: rewrite the leftmost innermost redex at its l-part.

    Returns:
        (str): The reduct.
        (None): If `word` is irreducible.
    """
    split = leftmost_innermost_redex(system, word)
    if split is None:
        return None
    rhs = system.rules[split.rule_index].rhs
    return word[: split.end_position - len(split.l_part)] + rhs + word[split.end_position :]


def ll_derivation(system: RewriteSystem, word: str) -> list[str]:
    """Return `word` followed by every word of its leftmost-largest derivation, ending in the normal form.

    Requires termination evidence, like [`normalize`][(m).].
    """
    require_termination(system)
    derivation = [system.check_word(word)]
    while (reduct := ll_step(system, derivation[-1])) is not None:
        derivation.append(reduct)
    return derivation


def normalize(system: RewriteSystem, word: str) -> str:
    """Return the leftmost-largest normal form ρ(`word`).

    The word is read left to right onto a stack of `(symbol, matcher state)` cells. When a symbol completes a
    left-hand side, the cells of the l-part are popped and the rhs is read next, ahead of the rest of the
    input. The stack below the reading position is always the irreducible s-part of the leftmost innermost
    redex, so this performs exactly the leftmost-largest derivation without rescanning.

    Args:
        system (RewriteSystem): A system with termination evidence (certificate or declared assumption).
        word (str): The word to normalise.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.
        SrsInputError: If `word` has a symbol outside the alphabet.

    Returns:
        (str): The normal form, irreducible, equal to `word` iff `word` is irreducible.
    """
    require_termination(system)
    automaton = build_matcher(system)
    preferred = preferred_rules(system)
    symbols: list[str] = []
    states = [automaton.root]
    pending = list(reversed(word))
    while pending:
        symbol = pending.pop()
        state, match = advance(automaton, states[-1], symbol)
        if match is None:
            symbols.append(symbol)
            states.append(state)
            continue
        lhs = automaton.patterns[match]
        keep = len(symbols) - (len(lhs) - 1)
        del symbols[keep:]
        del states[keep + 1 :]
        pending.extend(reversed(system.rules[preferred[lhs]].rhs))
    return "".join(symbols)


def decompose_normalization(system: RewriteSystem, x: str, y: str) -> list[DecompositionStep]:
    """Split the normalisation of `x·y` into innermost-redex steps.

    Reading `y` after `x`, each time the text read so far becomes an innermost redex `x_i·y_i` it is rewritten
    in one step to the irreducible `x_{i+1}`, and reading resumes from there. The last step holds the
    normal form `x_{n+1}` and the unread rest `y_{n+1}`, with `x_{n+1}·y_{n+1} = ρ(x·y)`.

    ???+ note

        The system must be convergent, forward-closed and right-reduced. Termination evidence and
        right-reducedness are checked up front, forward closure is checked step by step: a reduct that is not
        irreducible is reported as a precondition error rather than silently normalised further.

    Args:
        system (RewriteSystem): The system.
        x (str): Irreducible prefix.
        y (str): Irreducible suffix.

    Raises:
        SrsPreconditionError: If `x` or `y` is reducible, the system is not right-reduced, or a step does not
            reach an irreducible word.
        TerminationUnknownError: If `system` has no termination evidence.

    Returns:
        (list[DecompositionStep]): `n + 1` steps, `n = 0` when `x·y` is irreducible.
    """
    require_termination(system)
    for name, word in (("x", x), ("y", y)):
        if not is_irreducible(system, system.check_word(word)):
            msg = f"{name} = {word!r} is reducible."
            raise SrsPreconditionError(msg)
    for index, rule in enumerate(system.rules):
        if not is_irreducible(system, rule.rhs):
            msg = f"Rule {index} ({rule}) has a reducible rhs; right-reduce the system first."
            raise SrsPreconditionError(msg)

    automaton = build_matcher(system)
    steps: list[DecompositionStep] = []
    current, start = x, 0
    state = scan(automaton, current)
    for position, symbol in enumerate(y):
        state, match = advance(automaton, state, symbol)
        if match is None:
            continue
        segment = y[start : position + 1]
        steps.append(DecompositionStep(xi=current, yi=segment))
        reduct = ll_step(system, current + segment)
        if reduct is None or not is_irreducible(system, reduct):
            msg = f"{current + segment!r} does not reach its normal form in one step; the system is not forward-closed."
            raise SrsPreconditionError(msg)
        logger.debug("Decomposition step %r -> %r", current + segment, reduct)
        current, start = reduct, position + 1
        state = scan(automaton, current)
    steps.append(DecompositionStep(xi=current, yi=y[start:]))
    return steps

"""Aho-Corasick construction over left-hand sides, and the single-symbol stepping built on it."""

import functools
import logging
from collections import deque

from lmsrs.core.models import RewriteSystem
from lmsrs.core.words import shortlex_key
from lmsrs.matcher.models import MatchAutomaton, ReachabilityInfo

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=128)
def build_matcher(system: RewriteSystem) -> MatchAutomaton:
    """Build the Aho-Corasick automaton of the left-hand sides of `system`.

    The trie is laid out breadth-first: every prefix of every lhs is a state, and sorting the prefixes
    short-lex gives the breadth-first numbering with siblings in precedence order. Failure links are then
    computed level by level (a depth-1 state fails to the root, any deeper state `q·c` fails to
    `goto(fail(q), c)`), the goto table is completed through them, and each state's matches are its own
    rules followed by the matches of its failure target.

    ???+ tip

        The result is cached per system, so every operation on the same system shares one automaton.

    Args:
        system (RewriteSystem): The system. An empty rule set yields the single root state.

    Returns:
        (MatchAutomaton): The automaton in total DFA form.
    """
    alphabet = system.alphabet
    patterns = tuple(rule.lhs for rule in system.rules)
    prefixes = {""} | {lhs[:end] for lhs in patterns for end in range(1, len(lhs) + 1)}
    labels = sorted(prefixes, key=lambda prefix: shortlex_key(prefix, alphabet))
    states = {label: state for state, label in enumerate(labels)}

    own: list[list[int]] = [[] for _ in labels]
    for index, lhs in enumerate(patterns):
        own[states[lhs]].append(index)

    fail = [0] * len(labels)
    goto: list[tuple[int, ...]] = []
    matches: list[tuple[int, ...]] = []
    for state, label in enumerate(labels):
        if state:
            parent = states[label[:-1]]
            fail[state] = goto[fail[parent]][alphabet.rank(label[-1])] if parent else 0
        fallback = goto[fail[state]] if state else None
        goto.append(
            tuple(
                states.get(label + symbol, fallback[column] if fallback else 0)
                for column, symbol in enumerate(alphabet.symbols)
            ),
        )
        matches.append(tuple(own[state]) + (matches[fail[state]] if state else ()))

    logger.debug("Built matcher with %d states for %d rules", len(labels), len(patterns))
    return MatchAutomaton(
        symbols=alphabet.symbols,
        patterns=patterns,
        labels=tuple(labels),
        goto_table=tuple(goto),
        fail=tuple(fail),
        longest_match=tuple(found[0] if found else None for found in matches),
        all_matches=tuple(matches),
    )


def advance(automaton: MatchAutomaton, state: int, symbol: str) -> tuple[int, int | None]:
    """Read one symbol.

    Args:
        automaton (MatchAutomaton): The automaton.
        state (int): Current state.
        symbol (str): Symbol to read.

    Raises:
        SrsInputError: If `symbol` is not in the alphabet.

    Returns:
        (tuple[int, int | None]): The next state and its longest match (a rule index), if any.
    """
    target = automaton.goto_table[state][automaton.column(symbol)]
    return target, automaton.longest_match[target]


def scan(automaton: MatchAutomaton, word: str, state: int | None = None) -> int:
    """Read `word` from `state` (default: the root) and return the state reached, ignoring matches."""
    current = automaton.root if state is None else state
    for symbol in word:
        current = automaton.goto_table[current][automaton.column(symbol)]
    return current


def first_match(automaton: MatchAutomaton, word: str, state: int | None = None) -> tuple[int, int] | None:
    """Find the shortest prefix of `word` whose reading from `state` completes a left-hand side.

    Returns:
        (tuple[int, int]): The exclusive end of that prefix and the longest match there.
        (None): If reading `word` never completes a left-hand side.
    """
    current = automaton.root if state is None else state
    for position, symbol in enumerate(word):
        current, match = advance(automaton, current, symbol)
        if match is not None:
            return position + 1, match
    return None


def irreducible_reachable_states(automaton: MatchAutomaton) -> ReachabilityInfo:
    """Breadth-first search over the goto table that never enters a state completing a left-hand side.

    Symbols are tried in precedence order, so the first word to reach a state is its short-lex least
    irreducible witness.
    """
    witnesses = {automaton.root: ""}
    queue = deque([automaton.root])
    while queue:
        state = queue.popleft()
        for column, symbol in enumerate(automaton.symbols):
            target = automaton.goto_table[state][column]
            if target in witnesses or automaton.is_match_state(target):
                continue
            witnesses[target] = witnesses[state] + symbol
            queue.append(target)
    return ReachabilityInfo(reachable=tuple(witnesses), witnesses=witnesses)

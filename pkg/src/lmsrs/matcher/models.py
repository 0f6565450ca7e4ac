"""Matcher Models."""

from typing import Any

from pydantic import PrivateAttr

from lmsrs.core.models import SrsModel
from lmsrs.exceptions import SrsInputError


class MatchAutomaton(SrsModel):
    """Aho-Corasick automaton over the left-hand sides of a system, in total DFA form.

    State `i` stands for the trie prefix `labels[i]`. States are numbered breadth-first with siblings in
    precedence order, so the root is `0` and the numbering only depends on the set of left-hand sides.

    Attributes:
        symbols (tuple[str, ...]): The alphabet, in precedence order. Column `j` of the goto table is `symbols[j]`.
        patterns (tuple[str, ...]): The left-hand side of every rule, by rule index.
        labels (tuple[str, ...]): The trie prefix each state stands for.
        goto_table (tuple[tuple[int, ...], ...]): Total transition table with failure links precomposed.
        fail (tuple[int, ...]): Suffix link of each state (the root links to itself).
        longest_match (tuple[int | None, ...]): Per state, the rule whose lhs is the longest suffix of the text
            read so far (lowest index among rules sharing that lhs), or `None`.
        all_matches (tuple[tuple[int, ...], ...]): Per state, every rule whose lhs is a suffix of the text read so
            far, longest lhs first.
        root (int): The start state.
    """

    symbols: tuple[str, ...]
    patterns: tuple[str, ...]
    labels: tuple[str, ...]
    goto_table: tuple[tuple[int, ...], ...]
    fail: tuple[int, ...]
    longest_match: tuple[int | None, ...]
    all_matches: tuple[tuple[int, ...], ...]
    root: int = 0
    _columns: dict[str, int] = PrivateAttr(default_factory=dict)
    _states: dict[str, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, context: Any, /) -> None:  # noqa: ANN401
        """Index symbol columns and state labels."""
        self._columns = {symbol: column for column, symbol in enumerate(self.symbols)}
        self._states = {label: state for state, label in enumerate(self.labels)}

    @property
    def state_count(self) -> int:
        """Number of states, the root included."""
        return len(self.labels)

    def column(self, symbol: str) -> int:
        """Return the goto-table column of `symbol`.

        Raises:
            SrsInputError: If `symbol` is not in the alphabet.
        """
        try:
            return self._columns[symbol]
        except KeyError:
            msg = f"Symbol {symbol!r} is not in the alphabet {''.join(self.symbols)!r}."
            raise SrsInputError(msg) from None

    def state_of(self, label: str) -> int | None:
        """Return the state standing for the trie prefix `label`, if there is one."""
        return self._states.get(label)

    def fail_chain(self, state: int) -> tuple[int, ...]:
        """Return `state` followed by its suffix links, down to (not including) the root.

        These are exactly the states whose label is a suffix of `labels[state]`.
        """
        chain = []
        while state != self.root:
            chain.append(state)
            state = self.fail[state]
        return tuple(chain)

    def is_match_state(self, state: int) -> bool:
        """Whether reaching `state` completes some left-hand side."""
        return bool(self.all_matches[state])


class ReachabilityInfo(SrsModel):
    """States reachable from the root along match-free paths, i.e. by irreducible words.

    Attributes:
        reachable (tuple[int, ...]): The states, in the order a breadth-first search discovers them.
        witnesses (dict[int, str]): For each reachable state, the short-lex least irreducible word reaching it.
    """

    reachable: tuple[int, ...]
    witnesses: dict[int, str]

"""Pushdown Models."""

from typing import Literal

from pydantic import model_validator

from lmsrs.analysis.models import DecisionEvidence
from lmsrs.core.models import RewriteSystem, SrsModel
from lmsrs.matcher.models import MatchAutomaton

BOTTOM_MARKER = "$"
END_MARKER = "#"


class StackCell(SrsModel):
    """A stack cell: a symbol and the matcher state reached by the stack word up to and including it."""

    symbol: str
    matcher_state: int


class CollapsePda(SrsModel):
    """The deterministic pushdown machine accepting `{ w# | ρ(u·w) = v, w ≠ λ }`.

    Built by [build_collapse_pda][src.lmsrs.pushdown.machine.], which checks the preconditions.

    Attributes:
        system (RewriteSystem): Right-reduced, convergent and forward-closed system with distinct lhs.
        matcher (MatchAutomaton): The system's matcher, simulated on the stack.
        u (str): Irreducible initial stack content (above the bottom marker).
        v (str): Irreducible stack content required at the end marker.
        evidence (DecisionEvidence): How the system's preconditions were met.
        bottom_marker (str): `$`.
        end_marker (str): `#`.
    """

    system: RewriteSystem
    matcher: MatchAutomaton
    u: str
    v: str
    evidence: DecisionEvidence
    bottom_marker: Literal["$"] = BOTTOM_MARKER
    end_marker: Literal["#"] = END_MARKER


class TraceStep(SrsModel):
    """One consumed input symbol.

    Attributes:
        symbol (str): The symbol read (`#` for the final step).
        transition (str): `push` when no lhs was completed, `reduce` when the l-part was replaced by its rhs,
            `end` for the end marker.
        rule_index (int | None): The rule applied by a `reduce`.
        stack (str): The stack word above the bottom marker after the step, bottom first.
    """

    symbol: str
    transition: Literal["push", "reduce", "end"]
    rule_index: int | None = None
    stack: str


class RunTrace(SrsModel):
    """A complete run of the collapse machine."""

    input_word: str
    initial_stack: str
    steps: tuple[TraceStep, ...]
    accepted: bool


class Production(SrsModel):
    """A grammar production `head -> body`. Body symbols are terminals or nonterminal names."""

    head: str
    body: tuple[str, ...]


class Grammar(SrsModel):
    """Context-free grammar generating the language of a collapse machine.

    Terminals are single characters (the alphabet, then `#`). Nonterminal names are longer than one character,
    so the two never clash.

    Attributes:
        start (str): Start symbol.
        terminals (tuple[str, ...]): The alphabet in precedence order, followed by `#`.
        nonterminals (tuple[str, ...]): Every nonterminal reachable from the start symbol.
        productions (tuple[Production, ...]): The productions.
        min_lengths (dict[str, int | None]): Length of the shortest word each nonterminal generates, or `None`
            for a non-generating nonterminal.
    """

    start: str
    terminals: tuple[str, ...]
    nonterminals: tuple[str, ...]
    productions: tuple[Production, ...]
    min_lengths: dict[str, int | None]

    @property
    def empty(self) -> bool:
        """Whether the grammar generates no word."""
        return self.min_lengths.get(self.start) is None

    def generating(self, nonterminal: str) -> bool:
        """Whether `nonterminal` generates at least one word."""
        return self.min_lengths.get(nonterminal) is not None


class LanguageDecision(SrsModel):
    """Emptiness of `{ w# | ρ(u·w) = v, w ≠ λ }`, with a shortest witness.

    Attributes:
        empty (bool): No such `w` exists.
        witness (str | None): Short-lex least among the shortest `w`, without the end marker.
        nonterminal_count (int): Size of the grammar the decision was read from.
        production_count (int): Size of the grammar the decision was read from.
    """

    empty: bool
    witness: str | None = None
    nonterminal_count: int = 0
    production_count: int = 0

    @model_validator(mode="after")
    def _check_witness(self) -> "LanguageDecision":
        if self.empty != (self.witness is None) or self.witness == "":
            msg = "A non-empty witness must be present exactly when the language is not empty."
            raise ValueError(msg)
        return self

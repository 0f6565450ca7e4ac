"""Emptiness and shortest witnesses of the collapse languages."""

import logging

from lmsrs.core.models import RewriteSystem
from lmsrs.exceptions import PdaInvariantError
from lmsrs.pushdown.grammar import pda_to_grammar, shortest_word
from lmsrs.pushdown.machine import build_collapse_pda, run_pda
from lmsrs.pushdown.models import END_MARKER, LanguageDecision

logger = logging.getLogger(__name__)


def decide_language(system: RewriteSystem, u: str, v: str) -> LanguageDecision:
    """Decide whether some non-empty `w` gives `ρ(u·w) = v`, and find the short-lex least shortest one.

    The machine is converted to a grammar, whose emptiness and least word are read off its shortest-length
    table. A witness is replayed on the machine before it is returned.

    Args:
        system (RewriteSystem): Right-reduced, convergent and forward-closed system.
        u (str): Irreducible start word.
        v (str): Irreducible target word.

    Raises:
        SrsInputError: If `u` or `v` has a symbol outside the alphabet.
        SrsPreconditionError: If the system or the words fail a precondition.
        TerminationUnknownError: If the system has no termination evidence.
        PdaInvariantError: If the machine is not deterministic, or the witness is not accepted by it.

    Returns:
        (LanguageDecision): Emptiness and witness.
    """
    pda = build_collapse_pda(system, u, v)
    grammar = pda_to_grammar(pda)
    word = shortest_word(grammar)
    witness = None if word is None else word.removesuffix(END_MARKER)
    if witness is not None and not run_pda(pda, witness + END_MARKER).accepted:
        msg = f"Witness {witness!r} for u={u!r}, v={v!r} is not accepted by the machine it was read from."
        raise PdaInvariantError(msg)
    logger.debug("Language for u=%r, v=%r: %s", u, v, "empty" if witness is None else f"witness {witness!r}")
    return LanguageDecision(
        empty=witness is None,
        witness=witness,
        nonterminal_count=len(grammar.nonterminals),
        production_count=len(grammar.productions),
    )

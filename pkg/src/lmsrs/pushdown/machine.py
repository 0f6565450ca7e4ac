"""The collapse machine: construction and runs.

The stack holds `(symbol, matcher state)` cells over a `$` bottom cell, so whether pushing a symbol completes
a left-hand side, and which is the longest, is a single goto-table lookup. Reading `a`:

1. if no lhs is completed, `a` is pushed;
2. if the longest completed lhs is `l0` with rule `l0 -> r0`, the `|l0| - 1` cells holding the rest of `l0` are
   popped and `r0` is pushed from the state of the exposed cell.

On a forward-closed system the stack word is always ρ(u·w') for the prefix `w'` read so far.
"""

import logging
from typing import Literal

from lmsrs.analysis.checks import check_distinct_lhs, require_decision_evidence
from lmsrs.core.models import RewriteSystem
from lmsrs.core.rewriting import is_irreducible
from lmsrs.exceptions import PdaInvariantError, SrsInputError, SrsPreconditionError
from lmsrs.matcher.automaton import advance, build_matcher
from lmsrs.pushdown.models import BOTTOM_MARKER, END_MARKER, CollapsePda, RunTrace, StackCell, TraceStep

logger = logging.getLogger(__name__)

Cell = tuple[str, int]


def build_collapse_pda(system: RewriteSystem, u: str, v: str) -> CollapsePda:
    """Build the machine for `{ w# | ρ(u·w) = v, w ≠ λ }`.

    Args:
        system (RewriteSystem): Right-reduced, with termination evidence, and confluence and forward closure either
            verified here or declared.
        u (str): Irreducible initial stack content.
        v (str): Irreducible accepting stack content.

    Raises:
        SrsInputError: If `u` or `v` has a symbol outside the alphabet.
        SrsPreconditionError: If the system fails a precondition, or `u` or `v` is reducible.
        TerminationUnknownError: If the system has no termination evidence.
        PdaInvariantError: If two rules share a lhs, which a system meeting the preconditions never has.

    Returns:
        (CollapsePda): The machine.
    """
    system.check_word(u)
    system.check_word(v)
    evidence = require_decision_evidence(system)
    for name, word in (("u", u), ("v", v)):
        if not is_irreducible(system, word):
            msg = f"{name} = {word!r} is reducible."
            raise SrsPreconditionError(msg)
    distinct = check_distinct_lhs(system)
    if not distinct.holds:
        msg = f"Rules {distinct.shared} share a left-hand side; the machine would not be deterministic."
        raise PdaInvariantError(msg)
    return CollapsePda(system=system, matcher=build_matcher(system), u=u, v=v, evidence=evidence)


def initial_cells(pda: CollapsePda) -> list[Cell]:
    """Return the initial stack: the bottom cell, then the cells of `u`."""
    cells: list[Cell] = [(BOTTOM_MARKER, pda.matcher.root)]
    for symbol in pda.u:
        state, _ = advance(pda.matcher, cells[-1][1], symbol)
        cells.append((symbol, state))
    return cells


def push_word(pda: CollapsePda, state: int, word: str) -> list[Cell] | None:
    """Cells pushed when `word` is read from `state`, or `None` if that completes a left-hand side."""
    cells = []
    for symbol in word:
        state, match = advance(pda.matcher, state, symbol)
        if match is not None:
            return None
        cells.append((symbol, state))
    return cells


def step(pda: CollapsePda, cells: list[Cell], symbol: str) -> tuple[Literal["push", "reduce"], int | None]:
    """Apply the transition for `symbol` to `cells` in place.

    Raises:
        PdaInvariantError: If the pushed rhs completes a left-hand side, i.e. the stack would be reducible.

    Returns:
        (tuple[str, int | None]): The transition kind and the rule it applied.
    """
    target, match = advance(pda.matcher, cells[-1][1], symbol)
    if match is None:
        cells.append((symbol, target))
        return "push", None
    lhs = pda.matcher.patterns[match]
    del cells[len(cells) - (len(lhs) - 1) :]
    pushed = push_word(pda, cells[-1][1], pda.system.rules[match].rhs)
    if pushed is None:
        stack = "".join(cell[0] for cell in cells[1:])
        msg = f"Rewriting with rule {match} leaves the reducible stack {stack + pda.system.rules[match].rhs!r}."
        raise PdaInvariantError(msg)
    cells.extend(pushed)
    return "reduce", match


def run_pda(pda: CollapsePda, input_word: str) -> RunTrace:
    """Run the machine on `w#`.

    Args:
        pda (CollapsePda): The machine.
        input_word (str): Input ending with the single end marker `#`.

    Raises:
        SrsInputError: If `#` is missing, repeated, or not last, or a symbol is outside the alphabet.
        PdaInvariantError: If the run meets a configuration the construction rules out.

    Returns:
        (RunTrace): Every intermediate stack, and whether the stack is `$v` at `#` after a non-empty `w`.
    """
    if not input_word.endswith(END_MARKER) or input_word.count(END_MARKER) != 1:
        msg = f"Input {input_word!r} must end with exactly one {END_MARKER!r}."
        raise SrsInputError(msg)
    word = pda.system.check_word(input_word[:-1])
    cells = initial_cells(pda)
    steps = []
    for symbol in word:
        transition, rule_index = step(pda, cells, symbol)
        steps.append(
            TraceStep(
                symbol=symbol,
                transition=transition,
                rule_index=rule_index,
                stack="".join(cell[0] for cell in cells[1:]),
            ),
        )
    stack = "".join(cell[0] for cell in cells[1:])
    steps.append(TraceStep(symbol=END_MARKER, transition="end", stack=stack))
    accepted = bool(word) and stack == pda.v
    logger.debug("Run on %r ends with stack %r (%s)", input_word, stack, "accepted" if accepted else "rejected")
    return RunTrace(input_word=input_word, initial_stack=pda.u, steps=tuple(steps), accepted=accepted)


def stack_cells(pda: CollapsePda, word: str) -> list[StackCell]:
    """Return the stack above the bottom marker after reading `word` (no end marker), as cells."""
    cells = initial_cells(pda)
    for symbol in pda.system.check_word(word):
        step(pda, cells, symbol)
    return [StackCell(symbol=symbol, matcher_state=state) for symbol, state in cells[1:]]

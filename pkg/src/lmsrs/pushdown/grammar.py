"""From the collapse machine to a context-free grammar, and shortest words of that grammar.

The grammar is the usual triple construction specialised to the machine. A nonterminal stands for the input
read while one stack cell `X` stays on top or below, from the moment `X` is exposed in a given *mode* until it
is popped. The mode records what the machine does when `X` is finally exposed again or popped:

* `run`: `X` is exposed and reading goes on;
* `pop j r`: a left-hand side was completed above `X`, `X` is popped along with `j` more cells, then `r` is
  pushed;
* `chk i`: the end marker was read, `X` must hold `v[i]` and the cells below must spell `v[:i]`;
* `acc`: the bottom cell accepted.

The possible return modes of a cell are read off its matcher state: a cell can only be popped for a lhs
whose proper prefix is a suffix of its state label, and only checked at positions of `v` holding its symbol.
Nonterminals are created on demand from the start symbol, so the grammar only holds what is reachable.
"""

import heapq
import logging
from collections import defaultdict, deque
from typing import Any

from lmsrs.matcher.automaton import advance
from lmsrs.pushdown.machine import Cell, initial_cells, push_word, step
from lmsrs.pushdown.models import BOTTOM_MARKER, END_MARKER, CollapsePda, Grammar, Production

logger = logging.getLogger(__name__)

START = "<S>"
RUN = ("run",)
ACCEPT = ("acc",)

Mode = tuple[Any, ...]
Key = tuple[Any, ...]
Body = list[Any]


def _describe_cell(cell: Cell) -> str:
    return f"{cell[0]}{cell[1]}"


def _describe_mode(mode: Mode) -> str:
    if mode[0] == "pop":
        return f"pop{mode[1]}/{mode[2] or 'eps'}"
    if mode[0] == "chk":
        return f"chk{mode[1]}"
    return mode[0]


class GrammarBuilder:
    """Builds the grammar of a [CollapsePda][src.lmsrs.pushdown.models.] on demand from the start symbol.

    Attributes:
        pda (CollapsePda): The machine.
    """

    def __init__(self, pda: CollapsePda) -> None:
        """Initialize the builder and precompute the pop modes of every lhs prefix."""
        self.logger = logging.getLogger(self.__class__.__name__)
        self.pda = pda
        self.automaton = pda.matcher
        self.bottom: Cell = (BOTTOM_MARKER, self.automaton.root)
        self._names: dict[Key, str] = {}
        self._queue: deque[Key] = deque()
        self._productions: list[tuple[str, tuple[str, ...]]] = []
        self._feasible: dict[Cell, tuple[Mode, ...]] = {}
        self._pushed: dict[tuple[Cell, str], tuple[Cell, ...] | None] = {}
        self._prefix_modes: dict[int, list[Mode]] = defaultdict(list)
        for rule in pda.system.rules:
            for j in range(len(rule.lhs) - 1):
                modes = self._prefix_modes[self.automaton.state_of(rule.lhs[: j + 1])]
                if ("pop", j, rule.rhs) not in modes:
                    modes.append(("pop", j, rule.rhs))
        self._check_modes: dict[str, list[Mode]] = defaultdict(list)
        for i in range(-1, len(pda.v) - 1):
            self._check_modes[pda.v[i + 1]].append(("chk", i))

    def build(self) -> Grammar:
        """Create every nonterminal reachable from the start symbol and its productions.

        Raises:
            PdaInvariantError: If the first step from `u` meets a configuration the construction rules out.
        """
        self._names[("S",)] = START
        for symbol in self.automaton.symbols:
            cells = initial_cells(self.pda)
            step(self.pda, cells, symbol)
            self._add(START, [symbol, ("R", tuple(cells), RUN, ACCEPT)])
        while self._queue:
            key = self._queue.popleft()
            if key[0] == "A":
                self._expand_top(key)
            else:
                self._expand_rest(key)
        terminals = (*self.automaton.symbols, END_MARKER)
        nonterminals = tuple(self._names.values())
        lengths = min_lengths(nonterminals, self._productions, frozenset(terminals))
        self.logger.debug(
            "Grammar has %d nonterminals and %d productions",
            len(nonterminals),
            len(self._productions),
        )
        return Grammar(
            start=START,
            terminals=terminals,
            nonterminals=nonterminals,
            productions=tuple(Production(head=head, body=body) for head, body in self._productions),
            min_lengths=lengths,
        )

    def _name(self, key: Key) -> str:
        name = self._names.get(key)
        if name is None:
            if key[0] == "A":
                description = f"{_describe_cell(key[1])}|{_describe_mode(key[2])}"
            else:
                cells = ".".join(_describe_cell(cell) for cell in key[1])
                description = f"{cells}|{_describe_mode(key[2])}|{_describe_mode(key[3])}"
            name = f"<{key[0]}{len(self._names)}:{description}>"
            self._names[key] = name
            self._queue.append(key)
        return name

    def _add(self, head: str, body: Body) -> None:
        self._productions.append(
            (head, tuple(item if isinstance(item, str) else self._name(item) for item in body)),
        )

    def feasible(self, cell: Cell) -> tuple[Mode, ...]:
        """Modes in which `cell` can be popped or end a run."""
        if cell == self.bottom:
            return (ACCEPT,)
        modes = self._feasible.get(cell)
        if modes is None:
            pops = {
                mode: None
                for state in self.automaton.fail_chain(cell[1])
                for mode in self._prefix_modes.get(state, ())
            }
            modes = (*pops, *self._check_modes.get(cell[0], ()))
            self._feasible[cell] = modes
        return modes

    def _push(self, cell: Cell, rhs: str) -> tuple[Cell, ...] | None:
        key = (cell, rhs)
        if key not in self._pushed:
            pushed = push_word(self.pda, cell[1], rhs)
            self._pushed[key] = None if pushed is None else tuple(pushed)
        return self._pushed[key]

    def _continue(self, cell: Cell, entering: Mode, mode: Mode) -> Body | None:
        """What follows once `cell` is exposed again in the `entering` mode, until it returns `mode`.

        Returns `None` when that is impossible.
        """
        if entering[0] == "run":
            return [("A", cell, mode)]
        if entering[0] == "pop":
            _, j, rhs = entering
            if j:
                return [] if cell != self.bottom and mode == ("pop", j - 1, rhs) else None
            pushed = self._push(cell, rhs)
            if pushed is None:
                return None
            return [("R", (cell, *pushed), RUN, mode)] if pushed else [("A", cell, mode)]
        if entering[0] == "chk":
            i = entering[1]
            if i >= 0:
                matches = cell != self.bottom and cell[0] == self.pda.v[i] and mode == ("chk", i - 1)
                return [] if matches else None
            return [] if cell == self.bottom and mode == ACCEPT else None
        return None

    def _expand_top(self, key: Key) -> None:
        _, cell, mode = key
        head = self._names[key]
        for symbol in self.automaton.symbols:
            target, match = advance(self.automaton, cell[1], symbol)
            if match is None:
                pushed = (symbol, target)
                for returned in self.feasible(pushed):
                    tail = self._continue(cell, returned, mode)
                    if tail is not None:
                        self._add(head, [symbol, ("A", pushed, returned), *tail])
                continue
            lhs, rhs = self.automaton.patterns[match], self.pda.system.rules[match].rhs
            if len(lhs) == 1:
                tail = self._continue(cell, ("pop", 0, rhs), mode)
                if tail is not None:
                    self._add(head, [symbol, *tail])
            elif mode == ("pop", len(lhs) - 2, rhs):
                self._add(head, [symbol])
        v = self.pda.v
        if cell == self.bottom:
            if mode == ACCEPT and not v:
                self._add(head, [END_MARKER])
        elif v and cell[0] == v[-1] and mode == ("chk", len(v) - 2):
            self._add(head, [END_MARKER])

    def _expand_rest(self, key: Key) -> None:
        _, cells, entering, mode = key
        head = self._names[key]
        if len(cells) == 1:
            tail = self._continue(cells[0], entering, mode)
            if tail is not None:
                self._add(head, tail)
            return
        top, rest = cells[-1], cells[:-1]
        for returned in self.feasible(top):
            tail = self._continue(top, entering, returned)
            if tail is not None:
                self._add(head, [*tail, ("R", rest, returned, mode)])


def pda_to_grammar(pda: CollapsePda) -> Grammar:
    """Convert the collapse machine into an equivalent context-free grammar over Σ ∪ {#}.

    Args:
        pda (CollapsePda): The machine.

    Returns:
        (Grammar): A grammar generating exactly the words `w#` the machine accepts.
    """
    return GrammarBuilder(pda).build()


def min_lengths(
    nonterminals: tuple[str, ...],
    productions: list[tuple[str, tuple[str, ...]]],
    terminals: frozenset[str],
) -> dict[str, int | None]:
    """Length of the shortest word of every nonterminal, `None` for non-generating ones.

    Knuth's generalisation of Dijkstra's algorithm: a production becomes ready once all its nonterminals have a
    final length, and the shortest ready candidate is final.
    """
    remaining: list[int] = []
    partial: list[int] = []
    uses: dict[str, list[int]] = defaultdict(list)
    heap: list[tuple[int, str]] = []
    for index, (head, body) in enumerate(productions):
        inner = [symbol for symbol in body if symbol not in terminals]
        remaining.append(len(inner))
        partial.append(len(body) - len(inner))
        for symbol in inner:
            uses[symbol].append(index)
        if not inner:
            heap.append((partial[index], head))
    heapq.heapify(heap)
    final: dict[str, int] = {}
    while heap:
        length, head = heapq.heappop(heap)
        if head in final:
            continue
        final[head] = length
        for index in uses[head]:
            partial[index] += length
            remaining[index] -= 1
            if not remaining[index]:
                heapq.heappush(heap, (partial[index], productions[index][0]))
    return {nonterminal: final.get(nonterminal) for nonterminal in nonterminals}


def shortest_word(grammar: Grammar) -> str | None:
    """Return the least word of the grammar in the short-lex order over its terminal order.

    Nonterminals are settled by increasing shortest length. Within one length the least word of a
    nonterminal is the least concatenation over its shortest productions, found by iterating to a fixpoint
    (a production can use nonterminals of the same length through `λ`-generating ones).

    Returns:
        (str): The word, including the end marker.
        (None): If the grammar is empty.
    """
    if grammar.empty:
        return None
    encode = {terminal: chr(rank) for rank, terminal in enumerate(grammar.terminals)}
    lengths = grammar.min_lengths
    groups: dict[int, list[Production]] = defaultdict(list)
    for production in grammar.productions:
        if not grammar.generating(production.head) or any(
            symbol not in encode and not grammar.generating(symbol) for symbol in production.body
        ):
            continue
        total = sum(1 if symbol in encode else lengths[symbol] for symbol in production.body)
        if total == lengths[production.head]:
            groups[total].append(production)

    best: dict[str, str] = {}
    for length in sorted(groups):
        changed = True
        while changed:
            changed = False
            for production in groups[length]:
                parts = [encode.get(symbol) or best.get(symbol) for symbol in production.body]
                if any(part is None for part in parts):
                    continue
                candidate = "".join(parts)
                if production.head not in best or candidate < best[production.head]:
                    best[production.head] = candidate
                    changed = True
    decode = {code: terminal for terminal, code in encode.items()}
    return "".join(decode[code] for code in best[grammar.start])


def generate(grammar: Grammar, max_length: int) -> frozenset[str]:
    """Every word of the grammar with at most `max_length` symbols (end marker included).

    A bounded fixpoint over all nonterminals; meant for small grammars and cross-checks.
    """
    terminals = set(grammar.terminals)
    words: dict[str, set[str]] = {nonterminal: set() for nonterminal in grammar.nonterminals}
    changed = True
    while changed:
        changed = False
        for production in grammar.productions:
            found = {""}
            for symbol in production.body:
                if symbol in terminals:
                    found = {word + symbol for word in found if len(word) < max_length}
                else:
                    found = {
                        word + tail for word in found for tail in words[symbol] if len(word) + len(tail) <= max_length
                    }
                if not found:
                    break
            new = found - words[production.head]
            if new:
                words[production.head] |= new
                changed = True
    return frozenset(words[grammar.start])

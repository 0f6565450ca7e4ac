"""Core Models: alphabets, rules, rewrite systems and redex splits."""

from collections.abc import Iterable
from enum import IntEnum
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_serializer, field_validator, model_validator
from pydantic.alias_generators import to_camel

from lmsrs._types import Assumption
from lmsrs.exceptions import SrsInputError

RESERVED_SYMBOLS = frozenset({"#", "$"})
"""`#` ends pushdown input and `$` marks the stack bottom, so neither may be an alphabet symbol."""

EPSILON = "eps"
"""How the empty word λ is spelled in rule files and reports."""


class SrsModel(BaseModel):
    """Base model for every lm-srs value.

    Values are frozen (hashable, safe to share between concurrent decisions) and serialize with camelCase
    aliases, which is the field naming of the JSON reports. Fields can still be populated by their snake_case
    names.
    """

    model_config = ConfigDict(frozen=True, alias_generator=to_camel, validate_by_name=True)


class Ordering(IntEnum):
    """Result of a short-lex comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class Alphabet(SrsModel):
    """An alphabet Σ with a total precedence order.

    The position of a symbol in `symbols` is its precedence rank: later symbols are greater.

    Attributes:
        symbols (tuple[str, ...]): Distinct single printable characters, in ascending precedence.
    """

    symbols: Annotated[tuple[str, ...], Field(min_length=1)]
    _ranks: dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("symbols")
    @classmethod
    def _check_symbols(cls, symbols: tuple[str, ...]) -> tuple[str, ...]:
        for symbol in symbols:
            if len(symbol) != 1 or not symbol.isprintable() or symbol.isspace():
                msg = f"Alphabet symbols must be single printable characters, got {symbol!r}."
                raise ValueError(msg)
            if symbol in RESERVED_SYMBOLS:
                msg = f"Symbol {symbol!r} is reserved."
                raise ValueError(msg)
        if len(set(symbols)) != len(symbols):
            msg = f"Alphabet symbols must be distinct, got {' '.join(symbols)}."
            raise ValueError(msg)
        return symbols

    def model_post_init(self, context: Any, /) -> None:  # noqa: ANN401
        """Index the precedence ranks once the symbols are validated."""
        self._ranks = {symbol: rank for rank, symbol in enumerate(self.symbols)}

    @classmethod
    def of(cls, symbols: str | Iterable[str]) -> "Alphabet":
        """Build an alphabet from a string (`"abc"`) or any iterable of symbols, in ascending precedence."""
        return cls(symbols=tuple(symbols))

    def __len__(self) -> int:
        """Number of symbols."""
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        """Whether `symbol` belongs to the alphabet."""
        return symbol in self._ranks

    def rank(self, symbol: str) -> int:
        """Return the precedence rank of `symbol`.

        Raises:
            SrsInputError: If `symbol` is not in the alphabet.
        """
        try:
            return self._ranks[symbol]
        except KeyError:
            msg = f"Symbol {symbol!r} is not in the alphabet {''.join(self.symbols)!r}."
            raise SrsInputError(msg) from None

    def check_word(self, word: str) -> str:
        """Return `word` unchanged if every symbol belongs to the alphabet.

        Raises:
            SrsInputError: Naming the first symbol that does not.
        """
        for symbol in word:
            if symbol not in self._ranks:
                msg = f"Symbol {symbol!r} in {word!r} is not in the alphabet {''.join(self.symbols)!r}."
                raise SrsInputError(msg)
        return word

    def ranks(self, word: str) -> tuple[int, ...]:
        """Return the precedence ranks of the symbols of `word`."""
        return tuple(self.rank(symbol) for symbol in word)


class Rule(SrsModel):
    """A rewrite rule `lhs -> rhs`.

    Attributes:
        lhs (str): Non-empty left-hand side.
        rhs (str): Right-hand side, possibly λ (`""`).
    """

    lhs: Annotated[str, Field(min_length=1)]
    rhs: str = ""

    def __str__(self) -> str:
        """Render as it is written in a system file."""
        return f"{self.lhs} -> {self.rhs or EPSILON}"


class RewriteSystem(SrsModel):
    """A string rewriting system R over an alphabet.

    ???+ tip

        Use [`of`][(c).] for literals in code and tests, e.g.
        `RewriteSystem.of("abc", [("ab", "c")])`.

    Attributes:
        alphabet (Alphabet): Σ with its precedence order.
        rules (tuple[Rule, ...]): The rules in file order. Rule indices everywhere refer to this order.
        assumptions (frozenset[Assumption]): Facts declared for the system instead of being verified.
        termination_provenance (str | None): Provenance of termination evidence resolved by a caller, such as
            `assumed-flag`. Not serialized, and never mistaken for a declared assumption.
    """

    alphabet: Alphabet
    rules: tuple[Rule, ...] = ()
    assumptions: frozenset[Assumption] = frozenset()
    termination_provenance: str | None = Field(default=None, exclude=True)

    @model_validator(mode="after")
    def _check_rules(self) -> "RewriteSystem":
        seen: set[tuple[str, str]] = set()
        for index, rule in enumerate(self.rules):
            for side in (rule.lhs, rule.rhs):
                self.alphabet.check_word(side)
            key = (rule.lhs, rule.rhs)
            if key in seen:
                msg = f"Rule {index} ({rule}) is a duplicate."
                raise ValueError(msg)
            seen.add(key)
        return self

    @field_serializer("assumptions")
    def _serialize_assumptions(self, assumptions: frozenset[Assumption]) -> list[str]:
        return sorted(assumptions)

    @classmethod
    def of(
        cls,
        symbols: str | Iterable[str],
        rules: Iterable[tuple[str, str]] = (),
        assumptions: Iterable[Assumption] = (),
    ) -> "RewriteSystem":
        """Build a system from plain literals.

        Args:
            symbols (str | Iterable[str]): The alphabet in ascending precedence.
            rules (Iterable[tuple[str, str]]): `(lhs, rhs)` pairs, `""` for λ.
            assumptions (Iterable[Assumption], optional): Declared facts. Defaults to none.
        """
        return cls(
            alphabet=Alphabet.of(symbols),
            rules=tuple(Rule(lhs=lhs, rhs=rhs) for lhs, rhs in rules),
            assumptions=frozenset(assumptions),
        )

    @property
    def left_hand_sides(self) -> tuple[str, ...]:
        """The distinct left-hand sides, in order of first appearance."""
        return tuple(dict.fromkeys(rule.lhs for rule in self.rules))

    def assume(self, *assumptions: Assumption) -> "RewriteSystem":
        """Return a copy of the system that also declares `assumptions`."""
        return self.model_copy(update={"assumptions": self.assumptions | frozenset(assumptions)})

    def vouched(self, provenance: str) -> "RewriteSystem":
        """Return a copy carrying termination evidence resolved elsewhere, recorded as `provenance`."""
        return self.model_copy(update={"termination_provenance": provenance})

    def with_rules(self, rules: Iterable[Rule]) -> "RewriteSystem":
        """Return a system over the same alphabet, assumptions and termination evidence with `rules` instead."""
        return RewriteSystem(
            alphabet=self.alphabet,
            rules=tuple(rules),
            assumptions=self.assumptions,
            termination_provenance=self.termination_provenance,
        )

    def check_word(self, word: str) -> str:
        """Shortcut for [Alphabet.check_word][(m).Alphabet.]."""
        return self.alphabet.check_word(word)

    def __str__(self) -> str:
        """Render the rules as `{ab -> c, ...}`."""
        return "{" + ", ".join(str(rule) for rule in self.rules) + "}"


class RedexSplit(SrsModel):
    """The leftmost innermost redex of a word, split into its s-part and l-part.

    Attributes:
        s_part (str): Irreducible prefix in front of the l-part.
        l_part (str): Longest left-hand side that is a suffix of `s_part + l_part`.
        rule_index (int): The rule rewriting the l-part. Among rules sharing that lhs it is the one whose rhs
            is least in the short-lex order.
        end_position (int): Exclusive end of the redex in the scanned word.
    """

    s_part: str
    l_part: str
    rule_index: int
    end_position: int


class DecompositionStep(SrsModel):
    """One `(x_i, y_i)` step of splitting the normalisation of `x·y`.

    `x_i` is the irreducible normal form reached so far and `y_i` the segment of `y` consumed before
    `x_i·y_i` became an innermost redex (or the remainder of `y`, for the last step).
    """

    xi: str
    yi: str


class NormalizationResult(SrsModel):
    """A word, its leftmost-largest normal form and, on request, the derivation reaching it.

    Attributes:
        word (str): The input word.
        normal_form (str): ρ(word).
        monadic_term (str): The normal form read as a monadic term, e.g. `c(a(x))` for `ac`.
        derivation (tuple[str, ...] | None): Every word of the leftmost-largest derivation, `word` first.
    """

    word: str
    normal_form: str
    monadic_term: str
    derivation: tuple[str, ...] | None = None

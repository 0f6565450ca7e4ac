"""lm-srs Types."""

from typing import TYPE_CHECKING, Literal, TypeAlias, TypedDict

if TYPE_CHECKING:
    from lmsrs.evidence.providers import EvidenceProviderChain

Word: TypeAlias = str
"""A string over the alphabet. Every symbol is a single character; `""` is the empty string λ."""

Assumption = Literal["terminating", "confluent", "forward-closed"]
"""A fact a system may declare instead of having it verified."""

ASSUMPTIONS: tuple[Assumption, ...] = ("terminating", "confluent", "forward-closed")


class AnalyzerParams(TypedDict, total=False):
    """Analyzer Parameters.

    The table below represents the available parameters you can pass to the
    [Analyzer][src.lmsrs.analyzer.] class.

    | keyword | type |
    | ------- | ---- |
    | `assume_terminating` | `bool` |
    | `oracle_bound` | `int` |
    | `provider_chain` | [EvidenceProviderChain][src.lmsrs.evidence.providers.] |
    """

    assume_terminating: bool
    oracle_bound: int
    provider_chain: "EvidenceProviderChain"

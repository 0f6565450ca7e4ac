"""Analysis Models: the verdict records of the LM-condition checks."""

from enum import StrEnum
from typing import Literal

from pydantic import model_validator

from lmsrs.core.models import RewriteSystem, SrsModel


class TerminationReason(StrEnum):
    """Why a single rule is compatible with the short-lex order."""

    LENGTH_REDUCING = "length-reducing"
    SHORTLEX_DECREASING = "shortlex-decreasing"
    NONE = "none"


class TerminationCertificate(SrsModel):
    """Outcome of the short-lex sufficient termination check.

    Attributes:
        verdict (str): `certified` when every rule decreases in the short-lex order, `unknown` otherwise.
        per_rule (tuple[TerminationReason, ...]): The reason for each rule, by rule index.
    """

    verdict: Literal["certified", "unknown"]
    per_rule: tuple[TerminationReason, ...]

    @model_validator(mode="after")
    def _check_verdict(self) -> "TerminationCertificate":
        certified = TerminationReason.NONE not in self.per_rule
        if certified != (self.verdict == "certified"):
            msg = f"Verdict {self.verdict!r} contradicts the per-rule reasons."
            raise ValueError(msg)
        return self

    @property
    def certified(self) -> bool:
        """Whether termination is certified."""
        return self.verdict == "certified"


class OverlapKind(StrEnum):
    """How two left-hand sides superpose in a critical pair."""

    SUFFIX_PREFIX = "suffix-prefix"
    EMBEDDING = "embedding"


class CriticalPair(SrsModel):
    """Two one-step reducts of a common superposition.

    Attributes:
        left (str): Reduct by the first rule.
        right (str): Reduct by the second rule.
        superposition (str): The word both reducts come from.
        rules (tuple[int, int]): Indices of the first and second rule.
        kind (OverlapKind): Suffix-prefix overlap or embedding of the first lhs in the second.
    """

    left: str
    right: str
    superposition: str
    rules: tuple[int, int]
    kind: OverlapKind


class NonJoinablePair(SrsModel):
    """A critical pair whose sides have distinct normal forms."""

    pair: CriticalPair
    left_normal_form: str
    right_normal_form: str


class ConfluenceReport(SrsModel):
    """Outcome of the critical-pair confluence check."""

    confluent: bool
    critical_pair_count: int
    non_joinable: tuple[NonJoinablePair, ...] = ()


class ForwardClosureCounterexample(SrsModel):
    """An innermost redex none of whose one-step reducts is irreducible.

    Attributes:
        s_part (str): Irreducible prefix of the redex.
        rule_index (int): Rule whose lhs is the l-part.
        redex (str): `s_part` followed by that lhs.
    """

    s_part: str
    rule_index: int
    redex: str


class ForwardClosureReport(SrsModel):
    """Outcome of the forward-closure decision."""

    holds: bool
    counterexample: ForwardClosureCounterexample | None = None
    states_examined: int = 0

    @model_validator(mode="after")
    def _check_counterexample(self) -> "ForwardClosureReport":
        if self.holds == (self.counterexample is not None):
            msg = "A counterexample must be present exactly when forward closure fails."
            raise ValueError(msg)
        return self


class QuasiDetReport(SrsModel):
    """Outcome of the quasi-determinism check on the rules of a system.

    Attributes:
        holds (bool): No rule is flagged.
        lambda_rhs (tuple[int, ...]): Rules whose rhs is λ.
        end_stable (tuple[int, ...]): Rules whose two sides end with the same symbol.
        end_pair_repetitions (tuple[tuple[int, int], ...]): Rule pairs sharing the unordered pair of rightmost
            symbols of their sides.
    """

    holds: bool
    lambda_rhs: tuple[int, ...] = ()
    end_stable: tuple[int, ...] = ()
    end_pair_repetitions: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_holds(self) -> "QuasiDetReport":
        if self.holds != (not (self.lambda_rhs or self.end_stable or self.end_pair_repetitions)):
            msg = "holds must be true exactly when nothing is flagged."
            raise ValueError(msg)
        return self


class RhsPair(SrsModel):
    """A right-hand-side critical pair `{x·l1, l2}` for rules `l1 -> r1`, `l2 -> r2` with `r2 = x·r1`.

    Attributes:
        first (str): `x·l1`.
        second (str): `l2`.
        extension (str): `x`, possibly λ.
        rules (tuple[int, int]): Indices of `l1 -> r1` and `l2 -> r2`.
    """

    first: str
    second: str
    extension: str
    rules: tuple[int, int]

    @property
    def end_pair(self) -> frozenset[str]:
        """The unordered pair of rightmost symbols of the two words."""
        return frozenset((self.first[-1:], self.second[-1:]))


class RhsQuasiDetReport(SrsModel):
    """Outcome of the quasi-determinism check on RHS(R).

    Attributes:
        holds (bool): Nothing is flagged.
        pairs (tuple[RhsPair, ...]): RHS(R) itself.
        end_stable_pairs (tuple[int, ...]): Pairs whose two words end with the same symbol.
        repetitions (tuple[tuple[int, int], ...]): Pairs of pairs with the same unordered rightmost symbols.
            Only pair-to-pair repetitions are checked, not pairs against rules of the system.
    """

    holds: bool
    pairs: tuple[RhsPair, ...] = ()
    end_stable_pairs: tuple[int, ...] = ()
    repetitions: tuple[tuple[int, int], ...] = ()


class OverlapReport(SrsModel):
    """Overlap diagnostics: lhs-lhs and lhs-rhs overlaps, as ordered rule index pairs."""

    lhs_lhs_overlaps: tuple[tuple[int, int], ...] = ()
    lhs_rhs_overlaps: tuple[tuple[int, int], ...] = ()

    @property
    def clean(self) -> bool:
        """Whether no overlap was found."""
        return not (self.lhs_lhs_overlaps or self.lhs_rhs_overlaps)


class DistinctLhsReport(SrsModel):
    """Groups of rules sharing a left-hand side."""

    holds: bool
    shared: tuple[tuple[int, ...], ...] = ()


class SystemClassification(SrsModel):
    """Syntactic classes a system falls into.

    Attributes:
        right_reduced (bool): Every rhs is irreducible.
        inter_reduced (bool): Right-reduced, and no lhs is a substring of another rule's lhs.
        special (bool): Every rhs is λ.
        monadic (bool): Every rhs is a single symbol or λ.
        dwindling (bool): Every rhs is a proper prefix of its lhs.
    """

    right_reduced: bool
    inter_reduced: bool
    special: bool
    monadic: bool
    dwindling: bool


class DecisionEvidence(SrsModel):
    """How the preconditions of the collapse machine were met for a system.

    Attributes:
        termination (str): Provenance of the termination evidence (`certified`, `assumed-flag`, `assumed-file`).
        confluence (str): `verified` or `assumed`.
        forward_closure (str): `verified` or `assumed`.
    """

    termination: str
    confluence: Literal["verified", "assumed"]
    forward_closure: Literal["verified", "assumed"]


class AnalysisReport(SrsModel):
    """Every analysis check run on a system with termination evidence.

    Attributes:
        original (RewriteSystem): The system as given.
        right_reduced (RewriteSystem): The system after right-reduction. All checks below refer to it.
        certificate (TerminationCertificate): Short-lex certificate of the original system.
        termination_provenance (str): Provenance of the termination evidence the checks rest on.
        confluence (ConfluenceReport): Critical-pair confluence.
        forward_closure (ForwardClosureReport): Forward closure.
        quasi_deterministic (QuasiDetReport): Quasi-determinism of the rules.
        rhs_quasi_deterministic (RhsQuasiDetReport): Quasi-determinism of RHS(R).
        overlaps (OverlapReport): lhs-lhs and lhs-rhs overlaps.
        distinct_lhs (DistinctLhsReport): Rules sharing a left-hand side.
        classification (SystemClassification): Syntactic classes of the original system.
    """

    original: RewriteSystem
    right_reduced: RewriteSystem
    certificate: TerminationCertificate
    termination_provenance: str
    confluence: ConfluenceReport
    forward_closure: ForwardClosureReport
    quasi_deterministic: QuasiDetReport
    rhs_quasi_deterministic: RhsQuasiDetReport
    overlaps: OverlapReport
    distinct_lhs: DistinctLhsReport
    classification: SystemClassification

    @property
    def convergent_forward_closed(self) -> bool:
        """Whether the right-reduced system is confluent and forward-closed (termination is a given here)."""
        return self.confluence.confluent and self.forward_closure.holds

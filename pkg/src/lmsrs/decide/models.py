"""Decision Models: collapse verdicts, cap results and the LM-system report."""

from typing import Literal

from pydantic import model_validator

from lmsrs.analysis.models import (
    ConfluenceReport,
    DecisionEvidence,
    DistinctLhsReport,
    ForwardClosureReport,
    OverlapReport,
    QuasiDetReport,
    RhsQuasiDetReport,
    SystemClassification,
    TerminationCertificate,
)
from lmsrs.core.models import RewriteSystem, SrsModel

LmStatus = Literal["lm", "conditional-lm", "not-lm", "inconclusive"]


class CollapseWitness(SrsModel):
    """A right-hand side `rhs` and a non-empty `extension` with `ρ(rhs·extension) = rhs`.

    Attributes:
        rhs (str): A right-hand side of the right-reduced system.
        extension (str): The shortest such extension, short-lex least among those.
        rule_index (int): First rule of the right-reduced system with that rhs.
    """

    rhs: str
    extension: str
    rule_index: int


class CollapseVerdict(SrsModel):
    """Whether a system is subterm-collapsing.

    Attributes:
        collapsing (bool): Some `x` and non-empty `y` have `x·y →* x`.
        witness (CollapseWitness | None): Present exactly when collapsing.
        system (RewriteSystem): The right-reduced system the decision was made on.
        evidence (DecisionEvidence): Provenance of the preconditions.
    """

    collapsing: bool
    witness: CollapseWitness | None = None
    system: RewriteSystem
    evidence: DecisionEvidence

    @model_validator(mode="after")
    def _check_witness(self) -> "CollapseVerdict":
        if self.collapsing != (self.witness is not None):
            msg = "A collapse witness must be present exactly when the system is collapsing."
            raise ValueError(msg)
        return self


class CapResult(SrsModel):
    """Answer to a cap query: does some non-empty `w` give `ρ(u·w) = v`?

    Attributes:
        derivable (bool): Such a `w` exists.
        cap_term (str | None): The shortest `w`, short-lex least among those. Present exactly when derivable.
        u (str): The intruder knowledge.
        v (str): The secret.
        evidence (DecisionEvidence): Provenance of the preconditions.
    """

    derivable: bool
    cap_term: str | None = None
    u: str
    v: str
    evidence: DecisionEvidence

    @model_validator(mode="after")
    def _check_cap_term(self) -> "CapResult":
        if self.derivable != (self.cap_term is not None) or self.cap_term == "":
            msg = "A non-empty cap term must be present exactly when the secret is derivable."
            raise ValueError(msg)
        return self


class LmReport(SrsModel):
    """Full verdict on whether a system is an LM-system.

    A stage that could not run (no termination evidence, or an earlier stage failing) is `None` and named in
    `stages_skipped`.

    ???+ note

        `status` is `lm` only when every stage passed and termination is certified. With termination assumed
        rather than certified the same outcome is `conditional-lm`, and `inconclusive` means termination could
        not even be assumed.

    Attributes:
        status (str): `lm`, `conditional-lm`, `not-lm` or `inconclusive`.
        is_lm (bool): `status` is `lm` or `conditional-lm`.
        original (RewriteSystem): The system as given.
        right_reduced (RewriteSystem | None): The system every stage below refers to.
        termination (TerminationCertificate): Short-lex certificate of the original system.
        termination_provenance (str | None): Provenance of the termination evidence used.
        confluence (ConfluenceReport | None): Critical-pair confluence.
        forward_closure (ForwardClosureReport | None): Forward closure.
        quasi_deterministic (QuasiDetReport): Quasi-determinism of the rules (informational).
        rhs_quasi_deterministic (RhsQuasiDetReport | None): Quasi-determinism of RHS(R).
        collapse (CollapseVerdict | None): Subterm-collapse decision.
        overlaps (OverlapReport): Overlap diagnostics (informational).
        distinct_lhs (DistinctLhsReport): Rules sharing a lhs (informational).
        classification (SystemClassification): Syntactic classes of the original system.
        deterministic (bool | None): Non-subterm-collapsing with RHS(R) quasi-deterministic.
        canonical (bool | None): Convergent and inter-reduced.
        stages_skipped (tuple[str, ...]): Stages that did not run.
    """

    status: LmStatus
    is_lm: bool
    original: RewriteSystem
    right_reduced: RewriteSystem | None = None
    termination: TerminationCertificate
    termination_provenance: str | None = None
    confluence: ConfluenceReport | None = None
    forward_closure: ForwardClosureReport | None = None
    quasi_deterministic: QuasiDetReport
    rhs_quasi_deterministic: RhsQuasiDetReport | None = None
    collapse: CollapseVerdict | None = None
    overlaps: OverlapReport
    distinct_lhs: DistinctLhsReport
    classification: SystemClassification
    deterministic: bool | None = None
    canonical: bool | None = None
    stages_skipped: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_status(self) -> "LmReport":
        if self.is_lm != (self.status in {"lm", "conditional-lm"}):
            msg = f"is_lm={self.is_lm} contradicts status {self.status!r}."
            raise ValueError(msg)
        return self

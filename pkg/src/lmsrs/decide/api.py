"""Top-level decisions: subterm collapse, the cap problem and the LM-system verdict."""

import logging

from lmsrs.analysis.checks import (
    check_distinct_lhs,
    check_quasi_deterministic,
    classify_system,
    overlap_diagnostics,
    require_decision_evidence,
    right_reduce,
    run_checks,
)
from lmsrs.analysis.termination import check_termination_shortlex
from lmsrs.core.models import RewriteSystem
from lmsrs.core.rewriting import is_irreducible, normalize
from lmsrs.decide.models import CapResult, CollapseVerdict, CollapseWitness, LmReport
from lmsrs.evidence.providers import EvidenceProviderChain
from lmsrs.exceptions import PdaInvariantError, SrsPreconditionError, TerminationUnknownError
from lmsrs.pushdown.language import decide_language

logger = logging.getLogger(__name__)


def causes_collapse(system: RewriteSystem, x: str) -> str | None:
    """Return the short-lex least shortest non-empty `y` with `ρ(x·y) = x`, if any.

    Args:
        system (RewriteSystem): Right-reduced, convergent and forward-closed system.
        x (str): Irreducible word.

    Raises:
        SrsPreconditionError: If `x` is reducible or the system fails a precondition.
        TerminationUnknownError: If the system has no termination evidence.
    """
    if not is_irreducible(system, system.check_word(x)):
        msg = f"x = {x!r} is reducible; collapse is only decided for irreducible words."
        raise SrsPreconditionError(msg)
    return decide_language(system, x, x).witness


def is_subterm_collapsing(system: RewriteSystem) -> CollapseVerdict:
    """Decide whether some `x` and non-empty `y` have `x·y →* x`.

    The system is right-reduced first. It is subterm-collapsing exactly when some right-hand side causes a
    collapse, so one language emptiness check per distinct rhs decides it.

    Raises:
        SrsPreconditionError: If the right-reduced system is not confluent or not forward-closed.
        TerminationUnknownError: If the system has no termination evidence.
        PdaInvariantError: If a witness does not re-verify by normalisation.
    """
    reduced = right_reduce(system)
    evidence = require_decision_evidence(reduced)
    first_rule: dict[str, int] = {}
    for index, rule in enumerate(reduced.rules):
        first_rule.setdefault(rule.rhs, index)
    logger.info("Deciding subterm-collapse for %d right-hand sides", len(first_rule))
    for rhs, rule_index in first_rule.items():
        extension = causes_collapse(reduced, rhs)
        if extension is None:
            continue
        if normalize(reduced, rhs + extension) != rhs:
            msg = f"Collapse witness {extension!r} for rhs {rhs!r} does not normalise back to it."
            raise PdaInvariantError(msg)
        witness = CollapseWitness(rhs=rhs, extension=extension, rule_index=rule_index)
        return CollapseVerdict(collapsing=True, witness=witness, system=reduced, evidence=evidence)
    return CollapseVerdict(collapsing=False, system=reduced, evidence=evidence)


def solve_cap(system: RewriteSystem, u: str, v: str) -> CapResult:
    """Decide whether some non-empty `w` gives `ρ(u·w) = v` and find the least such cap term.

    Args:
        system (RewriteSystem): Right-reduced, convergent and forward-closed system.
        u (str): Non-empty irreducible intruder knowledge.
        v (str): Non-empty irreducible secret.

    Raises:
        SrsPreconditionError: If `u` or `v` is empty or reducible, or the system fails a precondition.
        TerminationUnknownError: If the system has no termination evidence.
        PdaInvariantError: If the cap term does not re-verify by normalisation.

    Returns:
        (CapResult): Derivability and the cap term.
    """
    for name, word in (("u", u), ("v", v)):
        if not word:
            msg = f"{name} must be a non-empty word."
            raise SrsPreconditionError(msg)
    logger.info("Solving cap query u=%r, v=%r", u, v)
    decision = decide_language(system, u, v)
    if decision.witness is not None and normalize(system, u + decision.witness) != v:
        msg = f"Cap term {decision.witness!r} does not give {v!r} from {u!r}."
        raise PdaInvariantError(msg)
    return CapResult(
        derivable=not decision.empty,
        cap_term=decision.witness,
        u=u,
        v=v,
        evidence=require_decision_evidence(system),
    )


def verify_lm_system(system: RewriteSystem, provider_chain: EvidenceProviderChain | None = None) -> LmReport:
    """Run the whole LM-system pipeline and report every stage.

    Termination evidence is resolved first. Then the system is right-reduced and checked for confluence and
    forward closure, RHS(R) quasi-determinism is evaluated, and subterm collapse is decided when the system is
    convergent and forward-closed. Failing stages are verdict content, never errors.

    Args:
        system (RewriteSystem): Any system.
        provider_chain (EvidenceProviderChain, optional): Where termination evidence comes from. Defaults to the
            chain without an explicit assumption.

    Returns:
        (LmReport): The report.
    """
    chain = provider_chain or EvidenceProviderChain()
    certificate = check_termination_shortlex(system)
    try:
        termination = chain.resolve(system)
    except TerminationUnknownError:
        logger.warning("Termination of %s is neither certified nor assumed; the LM verdict is inconclusive", system)
        return LmReport(
            status="inconclusive",
            is_lm=False,
            original=system,
            termination=certificate,
            quasi_deterministic=check_quasi_deterministic(system),
            overlaps=overlap_diagnostics(system),
            distinct_lhs=check_distinct_lhs(system),
            classification=classify_system(system),
            stages_skipped=("right-reduction", "confluence", "forward-closure", "rhs-quasi-determinism", "collapse"),
        )

    working = system.vouched(termination.provenance) if termination.assumed else system
    report = run_checks(working)
    reduced = report.right_reduced
    convergent_forward_closed = report.convergent_forward_closed
    collapse = is_subterm_collapsing(reduced) if convergent_forward_closed else None
    is_lm = bool(convergent_forward_closed and report.rhs_quasi_deterministic.holds and not collapse.collapsing)
    if not is_lm:
        status = "not-lm"
    elif termination.assumed:
        status = "conditional-lm"
        logger.warning("LM verdict for %s rests on assumed termination (%s)", system, termination.provenance)
    else:
        status = "lm"
    logger.info("LM verdict for %s: %s", system, status)
    return LmReport(
        status=status,
        is_lm=is_lm,
        original=system,
        right_reduced=reduced,
        termination=certificate,
        termination_provenance=termination.provenance,
        confluence=report.confluence,
        forward_closure=report.forward_closure,
        quasi_deterministic=report.quasi_deterministic,
        rhs_quasi_deterministic=report.rhs_quasi_deterministic,
        collapse=collapse,
        overlaps=report.overlaps,
        distinct_lhs=report.distinct_lhs,
        classification=report.classification,
        deterministic=None if collapse is None else not collapse.collapsing and report.rhs_quasi_deterministic.holds,
        canonical=report.confluence.confluent and classify_system(reduced).inter_reduced,
        stages_skipped=() if collapse is not None else ("collapse",),
    )

"""lm-srs Analyzer Module."""

import logging
from typing import Unpack

from lmsrs._types import AnalyzerParams
from lmsrs.analysis.checks import right_reduce, run_checks
from lmsrs.analysis.models import AnalysisReport
from lmsrs.core.models import NormalizationResult, RewriteSystem
from lmsrs.core.rewriting import ll_derivation, normalize
from lmsrs.core.words import to_monadic_term
from lmsrs.decide.api import is_subterm_collapsing, solve_cap, verify_lm_system
from lmsrs.decide.models import CapResult, CollapseVerdict, LmReport
from lmsrs.evidence.providers import EvidenceProviderChain, TerminationEvidence
from lmsrs.exceptions import OracleDisagreementError, TerminationUnknownError
from lmsrs.oracle.models import SearchBudget
from lmsrs.oracle.search import all_normal_forms, brute_force_cap, brute_force_collapse
from lmsrs.pushdown.machine import build_collapse_pda, run_pda
from lmsrs.pushdown.models import END_MARKER, RunTrace


class Analyzer:
    """Analyzer for one rewrite system.

    Resolves termination evidence once, through the [EvidenceProviderChain][src.lmsrs.evidence.providers.], and
    runs every analysis and decision on the system with that evidence attached. Assumed evidence, whether from
    `assume_terminating=True`, the file or a custom provider, is carried as the system's
    `termination_provenance`, so every verdict records the provenance the chain resolved.

    ```python
    from lmsrs import Analyzer, RewriteSystem

    analyzer = Analyzer(RewriteSystem.of("abc", [("ab", "c")]), oracle_bound=4)
    analyzer.cap("a", "c").cap_term  # "b"
    ```

    ???+ tip

        With `oracle_bound` set, `normalize`, `collapse`, `cap` and `lm` are cross-checked against the brute-force
        oracle up to that word length and raise an
        [OracleDisagreementError][src.lmsrs.exceptions.] on any mismatch.

    Attributes:
        system (RewriteSystem): The system, carrying the evidence's provenance when termination is assumed.
        evidence (TerminationEvidence | None): The resolved evidence, `None` if there is none.
        oracle_bound (int | None): Word-length bound of the oracle cross-checks.
    """

    def __init__(self, system: RewriteSystem, **kwargs: Unpack[AnalyzerParams]) -> None:
        """Initialize with any [optional parameter][src.lmsrs._types.AnalyzerParams]."""
        self.logger = logging.getLogger(self.__class__.__name__)
        self.oracle_bound = kwargs.pop("oracle_bound", None)
        self._provider_chain = kwargs.pop(
            "provider_chain",
            EvidenceProviderChain(assume_terminating=kwargs.pop("assume_terminating", False)),
        )
        try:
            self.evidence: TerminationEvidence | None = self._provider_chain.resolve(system)
        except TerminationUnknownError:
            self.logger.debug("No termination evidence for %s", system)
            self.evidence = None
        self.system = system.vouched(self.evidence.provenance) if self.evidence and self.evidence.assumed else system

    @property
    def provenance(self) -> str:
        """Provenance of the termination evidence, `unknown` without any."""
        return self.evidence.provenance if self.evidence else "unknown"

    @property
    def budget(self) -> SearchBudget | None:
        """The oracle budget, if cross-checks are on."""
        return SearchBudget(max_word_length=self.oracle_bound) if self.oracle_bound else None

    def check(self) -> AnalysisReport:
        """Run every analysis check.

        Raises:
            TerminationUnknownError: If there is no termination evidence.
        """
        return run_checks(self.system)

    def normalize(self, word: str, trace: bool = False) -> NormalizationResult:  # noqa: FBT001, FBT002
        """Normalise `word`, optionally keeping the leftmost-largest derivation.

        Raises:
            TerminationUnknownError: If there is no termination evidence.
            SrsInputError: If `word` has a symbol outside the alphabet.
            OracleDisagreementError: If the exhaustive search finds a different normal form.
        """
        normal_form = normalize(self.system, word)
        if self.budget:
            search = all_normal_forms(self.system, word, self.budget)
            if search.complete and normal_form not in search.normal_forms:
                raise OracleDisagreementError(
                    "normalize",
                    {"word": word, "normal_form": normal_form, "oracle": sorted(search.normal_forms)},
                )
        return NormalizationResult(
            word=word,
            normal_form=normal_form,
            monadic_term=to_monadic_term(normal_form),
            derivation=tuple(ll_derivation(self.system, word)) if trace else None,
        )

    def collapse(self) -> CollapseVerdict:
        """Decide whether the system is subterm-collapsing.

        Raises:
            SrsPreconditionError: If the system is not convergent and forward-closed.
            TerminationUnknownError: If there is no termination evidence.
            OracleDisagreementError: If the oracle disagrees within its bound.
        """
        verdict = is_subterm_collapsing(self.system)
        self._cross_check_collapse(verdict)
        return verdict

    def cap(self, u: str, v: str) -> CapResult:
        """Solve the cap problem for `u` and `v` on the right-reduced system.

        Raises:
            SrsPreconditionError: If `u` or `v` is empty or reducible, or the system fails a precondition.
            TerminationUnknownError: If there is no termination evidence.
            OracleDisagreementError: If the oracle disagrees within its bound.
        """
        reduced = right_reduce(self.system)
        result = solve_cap(reduced, u, v)
        if self.budget:
            found = brute_force_cap(reduced, u, v, self.budget)
            within = result.cap_term is not None and len(result.cap_term) <= self.budget.max_word_length
            if (found is not None or within) and found != result.cap_term:
                raise OracleDisagreementError("cap", {"u": u, "v": v, "cap_term": result.cap_term, "oracle": found})
        return result

    def lm(self) -> LmReport:
        """Report whether the system is an LM-system. Never raises for a failing stage.

        Raises:
            OracleDisagreementError: If the collapse stage ran and the oracle disagrees within its bound.
        """
        report = verify_lm_system(self.system, provider_chain=self._provider_chain)
        if report.collapse is not None:
            self._cross_check_collapse(report.collapse)
        return report

    def explain(self, u: str, v: str, w: str) -> RunTrace:
        """Run the collapse machine for `u` and `v` on `w#`, on the right-reduced system.

        Raises:
            SrsInputError: If a word has a symbol outside the alphabet or `w` holds the end marker.
            SrsPreconditionError: If `u` or `v` is reducible or the system fails a precondition.
            TerminationUnknownError: If there is no termination evidence.
        """
        pda = build_collapse_pda(right_reduce(self.system), u, v)
        return run_pda(pda, w + END_MARKER)

    def _cross_check_collapse(self, verdict: CollapseVerdict) -> None:
        budget = self.budget
        if budget is None:
            return
        found = brute_force_collapse(verdict.system, budget)
        if found is not None and not verdict.collapsing:
            x, y = found
            raise OracleDisagreementError("collapse", {"x": x, "y": y, "decision": "non-collapsing"})
        witness = verdict.witness
        if (
            found is None
            and witness is not None
            and max(len(witness.rhs), len(witness.extension)) <= budget.max_word_length
        ):
            raise OracleDisagreementError(
                "collapse",
                {"x": witness.rhs, "y": witness.extension, "decision": "collapsing", "oracle": None},
            )
        self.logger.debug("Oracle agrees on collapse up to length %d", budget.max_word_length)

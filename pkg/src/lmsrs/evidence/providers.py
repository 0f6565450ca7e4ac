"""Termination Evidence and Providers.

Normalisation, right-reduction, the confluence and forward-closure checks and the collapse machine all need
the system to terminate. Termination is undecidable, so the evidence comes from a chain of providers, and
every verdict records which provider vouched for it.
"""

import functools
import logging
from abc import ABC, abstractmethod

from lmsrs.analysis.models import TerminationCertificate
from lmsrs.analysis.termination import check_termination_shortlex
from lmsrs.core.models import RewriteSystem, SrsModel
from lmsrs.exceptions import TerminationUnknownError


class TerminationEvidence(SrsModel):
    """Evidence that a system terminates, with its provenance.

    Attributes:
        provenance (str): `certified` (short-lex certificate), `assumed-flag` (explicit assumption passed by
            the caller) or `assumed-file` (declared in the system file). Custom providers may add their own.
        certificate (TerminationCertificate): The short-lex certificate, computed whatever the provenance.
    """

    provenance: str
    certificate: TerminationCertificate

    @property
    def assumed(self) -> bool:
        """Whether the evidence rests on an assumption rather than a certificate."""
        return self.provenance != "certified"


class BaseEvidenceProvider(ABC):
    """Abstract Class for Termination Evidence Providers.

    Subclasses set [`provenance`][(c).] and implement [`__load__`][(c).], which decides whether the provider
    can vouch for the given system.

    Attributes:
        provenance (str): Recorded on the evidence this provider yields.
    """

    provenance: str = ""

    @abstractmethod
    def __load__(self, system: RewriteSystem, certificate: TerminationCertificate) -> bool:
        """Implement the provider-specific check.

        Args:
            system (RewriteSystem): The system needing evidence.
            certificate (TerminationCertificate): Its short-lex certificate.

        Raises:
            NotImplementedError: If the method is not implemented in the subclass.
        """
        raise NotImplementedError

    def load(self, system: RewriteSystem) -> TerminationEvidence | None:
        """Load evidence for `system`.

        Returns:
            (TerminationEvidence): If the provider vouches for termination.
            (None): Otherwise.
        """
        certificate = check_termination_shortlex(system)
        if self.__load__(system, certificate):
            return TerminationEvidence(provenance=self.provenance, certificate=certificate)
        return None


class ShortlexCertificateProvider(BaseEvidenceProvider):
    """Provides evidence when every rule decreases in the short-lex order."""

    provenance = "certified"

    def __load__(self, system: RewriteSystem, certificate: TerminationCertificate) -> bool:  # noqa: ARG002
        """Vouch exactly when the certificate is `certified`."""
        return certificate.certified


class ExplicitAssumptionProvider(BaseEvidenceProvider):
    """Provides evidence from an explicit assumption, i.e. the `--assume-terminating` flag."""

    provenance = "assumed-flag"

    def __init__(self, assume_terminating: bool = False) -> None:  # noqa: FBT001, FBT002
        """Initialize the provider with the caller's assumption."""
        self.assume_terminating = assume_terminating

    def __load__(self, system: RewriteSystem, certificate: TerminationCertificate) -> bool:  # noqa: ARG002
        """Vouch when the caller assumed termination."""
        return self.assume_terminating


class DeclaredAssumptionProvider(BaseEvidenceProvider):
    """Provides evidence from an `assume: terminating` declaration carried by the system."""

    provenance = "assumed-file"

    def __load__(self, system: RewriteSystem, certificate: TerminationCertificate) -> bool:  # noqa: ARG002
        """Vouch when the system declares the assumption."""
        return "terminating" in system.assumptions


class EvidenceProviderChain:
    """Termination evidence provider chain.

    Tries to load evidence in the following order:

    1. The short-lex certificate
    2. An explicit assumption (`--assume-terminating`)
    3. A declared assumption (`assume: terminating` in the system file)

    The first provider that vouches wins. If none does, [`resolve`][(c).] raises a
    [TerminationUnknownError][src.lmsrs.exceptions.].

    ???+ note

        A certificate always beats an assumption, so a verdict is only ever marked as assumed when nothing could
        be proved. Between the two assumptions the explicit one wins, which is how the command-line flag
        overrides the file.

    Attributes:
        providers (list[BaseEvidenceProvider]): The list of providers in the chain.
    """

    providers: list[BaseEvidenceProvider]

    def __init__(self, assume_terminating: bool = False) -> None:  # noqa: FBT001, FBT002
        """Initialize the chain.

        Args:
            assume_terminating (bool, optional): Arms the explicit assumption provider. Defaults to False.
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.providers = [
            ShortlexCertificateProvider(),
            ExplicitAssumptionProvider(assume_terminating=assume_terminating),
            DeclaredAssumptionProvider(),
        ]

    def add_provider(self, provider: BaseEvidenceProvider, index: int = 0) -> None:
        """Add a provider to the chain.

        The default index is `0`, so the provider is consulted before the short-lex certificate.

        Example: Custom Provider Example
            ```python
            from lmsrs.evidence.providers import BaseEvidenceProvider, EvidenceProviderChain

            class LengthPreservingProvider(BaseEvidenceProvider):
                provenance = "assumed-length-preserving"

                def __load__(self, system, certificate) -> bool:
                    return all(len(rule.lhs) == len(rule.rhs) for rule in system.rules)

            chain = EvidenceProviderChain()
            chain.add_provider(LengthPreservingProvider(), index=1)
            analyzer = Analyzer(system, provider_chain=chain)
            ```

        Args:
            provider (BaseEvidenceProvider): The provider to add.
            index (int, optional): The index at which to insert the provider in the chain. Defaults to 0.
        """
        self.providers.insert(index, provider)

    def resolve(self, system: RewriteSystem) -> TerminationEvidence:
        """Resolve termination evidence using the provider chain.

        Raises:
            TerminationUnknownError: If no provider vouches for `system`.
        """
        for provider in self.providers:
            evidence = provider.load(system)
            if evidence:
                self.logger.debug("Termination evidence for %s: %s", system, evidence.provenance)
                return evidence
        msg = (
            f"Termination of {system} is not certified by the short-lex order and not assumed; "
            "pass --assume-terminating or declare `assume: terminating`."
        )
        raise TerminationUnknownError(msg)


@functools.lru_cache(maxsize=256)
def require_termination(system: RewriteSystem) -> TerminationEvidence:
    """Resolve termination evidence for `system`: evidence it carries, else the default chain.

    This is the gate every normalising operation passes. Callers that resolved evidence through their own chain
    (the [Analyzer][src.lmsrs.analyzer.]) pass a system built with
    [RewriteSystem.vouched][src.lmsrs.core.models.], so its provenance, e.g. `assumed-flag`, is what every
    verdict records.

    Raises:
        TerminationUnknownError: If `system` is neither certified nor declared terminating.
    """
    if system.termination_provenance is not None:
        return TerminationEvidence(
            provenance=system.termination_provenance,
            certificate=check_termination_shortlex(system),
        )
    return EvidenceProviderChain().resolve(system)

import pytest

from lmsrs.core.models import RewriteSystem
from lmsrs.evidence.providers import (
    BaseEvidenceProvider,
    DeclaredAssumptionProvider,
    EvidenceProviderChain,
    ExplicitAssumptionProvider,
    ShortlexCertificateProvider,
    require_termination,
)
from lmsrs.exceptions import TerminationUnknownError


class LengthPreservingProvider(BaseEvidenceProvider):
    provenance = "assumed-length-preserving"

    def __load__(self, system, certificate) -> bool:
        return all(len(rule.lhs) == len(rule.rhs) for rule in system.rules)


class TestEvidenceProviders:
    @pytest.mark.parametrize("provider,rules,assumptions,vouches", [
        (ShortlexCertificateProvider(), [("ab", "c")], [], True),
        (ShortlexCertificateProvider(), [("ab", "ca")], ["terminating"], False),
        (ExplicitAssumptionProvider(assume_terminating=True), [("ab", "ca")], [], True),
        (ExplicitAssumptionProvider(), [("ab", "ca")], [], False),
        (DeclaredAssumptionProvider(), [("ab", "ca")], ["terminating"], True),
        (DeclaredAssumptionProvider(), [("ab", "ca")], ["confluent"], False),
    ])
    def test_provider_load(self, make_system, provider, rules, assumptions, vouches):
        evidence = provider.load(make_system("abc", rules, assumptions))
        if vouches:
            assert evidence.provenance == provider.provenance
        else:
            assert evidence is None

    def test_certificate_is_always_attached(self, make_system):
        evidence = ExplicitAssumptionProvider(assume_terminating=True).load(make_system("abc", [("ab", "ca")]))
        assert evidence.assumed
        assert evidence.certificate.verdict == "unknown"

    def test_base_provider_is_abstract(self):
        with pytest.raises(TypeError):
            BaseEvidenceProvider()


class TestEvidenceProviderChain:
    def test_default_order(self):
        chain = EvidenceProviderChain()
        assert [type(provider) for provider in chain.providers] == [
            ShortlexCertificateProvider,
            ExplicitAssumptionProvider,
            DeclaredAssumptionProvider,
        ]

    @pytest.mark.parametrize("rules,assumptions,assume_terminating,provenance", [
        ([("ab", "c")], [], False, "certified"),
        ([("ab", "c")], ["terminating"], True, "certified"),
        ([("ab", "ca")], [], True, "assumed-flag"),
        ([("ab", "ca")], ["terminating"], False, "assumed-file"),
        ([("ab", "ca")], ["terminating"], True, "assumed-flag"),
    ])
    def test_resolve(self, make_system, rules, assumptions, assume_terminating, provenance):
        chain = EvidenceProviderChain(assume_terminating=assume_terminating)
        evidence = chain.resolve(make_system("abc", rules, assumptions))
        assert evidence.provenance == provenance
        assert evidence.assumed is (provenance != "certified")

    def test_resolve_fails(self, make_system):
        with pytest.raises(TerminationUnknownError, match="assume-terminating"):
            EvidenceProviderChain().resolve(make_system("abc", [("ab", "ca")]))

    def test_add_provider(self, make_system):
        chain = EvidenceProviderChain()
        chain.add_provider(LengthPreservingProvider())
        assert chain.resolve(make_system("abc", [("ab", "ca")])).provenance == "assumed-length-preserving"
        assert chain.resolve(make_system("abc", [("ab", "c")])).provenance == "certified"

        chain = EvidenceProviderChain(assume_terminating=True)
        chain.add_provider(LengthPreservingProvider(), index=2)
        assert chain.resolve(make_system("abc", [("ab", "ca")])).provenance == "assumed-flag"

    def test_require_termination(self, make_system):
        system = make_system("abc", [("ab", "c")])
        assert require_termination(system) is require_termination(RewriteSystem.of("abc", [("ab", "c")]))
        assert require_termination(make_system("abc", [("ab", "ca")], ["terminating"])).provenance == "assumed-file"
        carried = require_termination(make_system("abc", [("ab", "ca")], ["terminating"]).vouched("assumed-flag"))
        assert carried.provenance == "assumed-flag"
        assert not carried.certificate.certified
        with pytest.raises(TerminationUnknownError):
            require_termination(make_system("abc", [("ab", "ca")]))

import pytest

from lmsrs.analysis.checks import (
    check_confluence,
    check_distinct_lhs,
    check_forward_closed,
    check_quasi_deterministic,
    check_rhs_quasi_deterministic,
    classify_system,
    critical_pairs,
    is_right_reduced,
    overlap_diagnostics,
    require_decision_evidence,
    rhs_critical_pairs,
    right_reduce,
    run_checks,
)
from lmsrs.analysis.models import OverlapKind, TerminationReason
from lmsrs.analysis.termination import check_termination_shortlex
from lmsrs.core.rewriting import is_irreducible, leftmost_innermost_redex, ll_step, normalize
from lmsrs.exceptions import SrsPreconditionError, TerminationUnknownError
from lmsrs.matcher.automaton import build_matcher, irreducible_reachable_states
from lmsrs.utils import shortlex_words
from tests.conftest import NOT_CONFLUENT, NOT_FORWARD_CLOSED, NOT_FORWARD_CLOSED_SWAP, SHARED_LHS


class TestTermination:
    @pytest.mark.parametrize("symbols,rules,verdict,reasons", [
        ("abc", [("ab", "c")], "certified", (TerminationReason.LENGTH_REDUCING,)),
        ("cab", [("ab", "ca")], "certified", (TerminationReason.SHORTLEX_DECREASING,)),
        ("abc", [("ab", "ca")], "unknown", (TerminationReason.NONE,)),
        ("ab", [], "certified", ()),
    ])
    def test_check_termination_shortlex(self, make_system, symbols, rules, verdict, reasons):
        certificate = check_termination_shortlex(make_system(symbols, rules))
        assert certificate.verdict == verdict
        assert certificate.per_rule == reasons


class TestRightReduce:
    @pytest.mark.parametrize("symbols,rules,expected", [
        ("abcd", [("bb", "c"), ("ad", "abb")], [("bb", "c"), ("ad", "ac")]),
        ("abc", [("ab", "c")], [("ab", "c")]),
        ("ab", [("aa", "a")], [("aa", "a")]),
        ("abdc", [("ab", "c"), ("c", "d")], [("ab", "d"), ("c", "d")]),
        ("abdc", [("ab", "c"), ("ab", "d"), ("c", "d")], [("ab", "d"), ("c", "d")]),
    ])
    def test_right_reduce(self, make_system, symbols, rules, expected):
        reduced = right_reduce(make_system(symbols, rules, ["terminating"]))
        assert [(rule.lhs, rule.rhs) for rule in reduced.rules] == expected
        assert is_right_reduced(reduced)
        assert reduced.assumptions == {"terminating"}

    def test_requires_termination(self, make_system):
        with pytest.raises(TerminationUnknownError):
            right_reduce(make_system("abcd", [("bb", "c"), ("ad", "abb")]))

    def test_preserves_irreducibility_and_normal_forms(self, suite_system, make_system, word_bound):
        for system in (suite_system, make_system("abdc", [("ab", "c"), ("c", "d")])):
            reduced = right_reduce(system)
            for word in shortlex_words(system.alphabet.symbols, word_bound(system)):
                assert is_irreducible(reduced, word) == is_irreducible(system, word)
                assert normalize(reduced, word) == normalize(system, word)
            assert check_forward_closed(reduced).holds


class TestConfluence:
    def test_critical_pairs(self, make_system):
        pairs = critical_pairs(make_system("ab", [("aa", "a")]))
        assert [(pair.left, pair.right, pair.superposition) for pair in pairs] == [("aa", "aa", "aaa")]
        assert critical_pairs(make_system("abc", [("ab", "c")])) == []
        pairs = critical_pairs(make_system(*NOT_CONFLUENT))
        assert [(pair.left, pair.right, pair.superposition) for pair in pairs] == [
            ("ca", "ac", "aba"),
            ("cb", "bc", "bab"),
        ]

    def test_embedding_pairs(self, make_system):
        pairs = critical_pairs(make_system("abc", [("b", "c"), ("abb", "c")]))
        embedded = [(pair.left, pair.right) for pair in pairs if pair.kind is OverlapKind.EMBEDDING]
        assert embedded == [("c", "acb"), ("c", "abc")]
        pairs = critical_pairs(make_system(*SHARED_LHS))
        assert [(pair.left, pair.right, pair.rules) for pair in pairs] == [("d", "c", (0, 1)), ("c", "d", (1, 0))]

    @pytest.mark.parametrize("symbols,rules,confluent", [
        ("ab", [("aa", "a")], True),
        (*NOT_CONFLUENT, False),
        ("ab", [], True),
        (*SHARED_LHS, False),
    ])
    def test_check_confluence(self, make_system, symbols, rules, confluent):
        assert check_confluence(make_system(symbols, rules)).confluent is confluent

    def test_non_joinable_pair(self, make_system):
        report = check_confluence(make_system(*NOT_CONFLUENT))
        failure = report.non_joinable[0]
        assert (failure.left_normal_form, failure.right_normal_form) == ("ca", "ac")
        assert report.critical_pair_count == 2

    def test_suite_is_confluent(self, suite_system):
        assert check_confluence(suite_system).confluent


class TestForwardClosure:
    @pytest.mark.parametrize("symbols,rules,holds", [
        ("abc", [("ab", "c")], True),
        ("ab", [("aa", "a")], True),
        (*NOT_FORWARD_CLOSED, False),
        (*NOT_FORWARD_CLOSED_SWAP, False),
        ("abdc", [("ab", "c"), ("c", "d")], False),
    ])
    def test_check_forward_closed(self, make_system, symbols, rules, holds):
        assert check_forward_closed(make_system(symbols, rules)).holds is holds

    def test_counterexample(self, make_system):
        report = check_forward_closed(make_system(*NOT_FORWARD_CLOSED))
        assert (report.counterexample.s_part, report.counterexample.redex) == ("a", "aab")
        assert report.counterexample.rule_index == 0
        report = check_forward_closed(make_system(*NOT_FORWARD_CLOSED_SWAP))
        assert report.counterexample.redex == "bba"

    def test_innermost_redexes_reach_normal_form_in_one_step(self, suite_system, irreducible_words):
        info = irreducible_reachable_states(build_matcher(suite_system))
        extensions = irreducible_words(suite_system, 3)
        for s_part in info.witnesses.values():
            for extension in extensions:
                for lhs in suite_system.left_hand_sides:
                    word = s_part + extension + lhs
                    split = leftmost_innermost_redex(suite_system, word)
                    if len(word) > 10 or split.end_position != len(word) or split.l_part != lhs:
                        continue
                    assert is_irreducible(suite_system, ll_step(suite_system, word))

    def test_agrees_with_brute_force_on_small_systems(self, make_system, irreducible_words):
        for symbols, rules in [NOT_FORWARD_CLOSED, ("ab", [("aa", "a"), ("ab", "b")]), ("abc", [("ab", "c")])]:
            system = make_system(symbols, rules)
            redexes = [
                x + lhs
                for x in irreducible_words(system, 6)
                for lhs in system.left_hand_sides
                if leftmost_innermost_redex(system, x + lhs).end_position == len(x + lhs)
                and leftmost_innermost_redex(system, x + lhs).l_part == lhs
            ]
            holds = all(
                any(
                    is_irreducible(system, redex[: len(redex) - len(rule.lhs)] + rule.rhs)
                    for rule in system.rules
                    if redex.endswith(rule.lhs)
                )
                for redex in redexes
            )
            assert check_forward_closed(system).holds is holds


class TestQuasiDeterminism:
    @pytest.mark.parametrize("symbols,rules,holds,lambda_rhs,end_stable,repetitions", [
        ("abc", [("ab", "c")], True, (), (), ()),
        ("ab", [("aa", "a")], False, (), (0,), ()),
        ("abcd", [("ab", "c"), ("db", "ac")], False, (), (), ((0, 1),)),
        ("ab", [("ab", "")], False, (0,), (), ()),
    ])
    def test_check_quasi_deterministic(self, make_system, symbols, rules, holds, lambda_rhs, end_stable, repetitions):
        report = check_quasi_deterministic(make_system(symbols, rules))
        assert report.holds is holds
        assert report.lambda_rhs == lambda_rhs
        assert report.end_stable == end_stable
        assert report.end_pair_repetitions == repetitions

    @pytest.mark.parametrize("symbols,rules,pairs", [
        ("abcd", [("ab", "c"), ("db", "ac")], [("aab", "db", "a")]),
        ("abc", [("ab", "c")], []),
        ("abcd", [("ab", "c"), ("db", "c")], [("ab", "db", "")]),
    ])
    def test_rhs_critical_pairs(self, make_system, symbols, rules, pairs):
        found = rhs_critical_pairs(make_system(symbols, rules))
        assert [(pair.first, pair.second, pair.extension) for pair in found] == pairs

    @pytest.mark.parametrize("rules,holds", [
        ([("ab", "c")], True),
        ([("ab", "c"), ("cd", "ac")], True),
        ([("ab", "c"), ("cd", "ac"), ("fb", "g"), ("hd", "eg")], False),
        ([("ab", "c"), ("db", "c")], False),
    ])
    def test_check_rhs_quasi_deterministic(self, make_system, rules, holds):
        report = check_rhs_quasi_deterministic(make_system("abcdefgh", rules))
        assert report.holds is holds

    def test_rhs_repetition(self, make_system):
        report = check_rhs_quasi_deterministic(
            make_system("abcdefgh", [("ab", "c"), ("cd", "ac"), ("fb", "g"), ("hd", "eg")]),
        )
        assert [(pair.first, pair.second) for pair in report.pairs] == [("aab", "cd"), ("efb", "hd")]
        assert report.repetitions == ((0, 1),)
        assert report.end_stable_pairs == ()
        assert check_quasi_deterministic(
            make_system("abcdefgh", [("ab", "c"), ("cd", "ac"), ("fb", "g"), ("hd", "eg")]),
        ).holds


class TestDiagnostics:
    def test_overlap_diagnostics(self, make_system):
        assert overlap_diagnostics(make_system("abc", [("ab", "c")])).clean
        assert overlap_diagnostics(make_system("ab", [("aa", "a")])).lhs_lhs_overlaps == ((0, 0),)
        assert overlap_diagnostics(make_system(*NOT_FORWARD_CLOSED_SWAP)).lhs_rhs_overlaps == ((0, 0),)

    def test_distinct_lhs(self, make_system, suite_system):
        report = check_distinct_lhs(make_system(*SHARED_LHS))
        assert not report.holds
        assert report.shared == ((0, 1),)
        assert check_distinct_lhs(right_reduce(suite_system)).holds

    @pytest.mark.parametrize("symbols,rules,classes", [
        ("abc", [("ab", "c")], {"right_reduced", "inter_reduced", "monadic"}),
        ("ab", [("ab", ""), ("ba", "")], {"right_reduced", "inter_reduced", "special", "monadic", "dwindling"}),
        ("ab", [("ab", "a")], {"right_reduced", "inter_reduced", "monadic", "dwindling"}),
        ("abdc", [("ab", "c"), ("c", "d")], {"monadic"}),
        ("abc", [("b", "c"), ("abb", "c")], {"right_reduced", "monadic"}),
    ])
    def test_classify_system(self, make_system, symbols, rules, classes):
        classification = classify_system(make_system(symbols, rules))
        assert {name for name, value in classification.model_dump().items() if value} == classes


class TestDecisionEvidence:
    def test_verified(self, make_system):
        evidence = require_decision_evidence(make_system("abc", [("ab", "c")]))
        assert (evidence.termination, evidence.confluence, evidence.forward_closure) == (
            "certified",
            "verified",
            "verified",
        )

    def test_declared(self, make_system):
        system = make_system("ab", [("ab", "b")], ["terminating", "confluent", "forward-closed"])
        evidence = require_decision_evidence(system)
        assert (evidence.termination, evidence.confluence, evidence.forward_closure) == (
            "certified",
            "assumed",
            "assumed",
        )

    @pytest.mark.parametrize("symbols,rules,match", [
        (*NOT_FORWARD_CLOSED, "forward-closed"),
        (*NOT_CONFLUENT, "confluent"),
        ("abdc", [("ab", "c"), ("c", "d")], "right-reduced"),
    ])
    def test_rejected(self, make_system, symbols, rules, match):
        with pytest.raises(SrsPreconditionError, match=match):
            require_decision_evidence(make_system(symbols, rules))

    def test_termination_unknown(self, make_system):
        with pytest.raises(TerminationUnknownError):
            require_decision_evidence(make_system("abc", [("ab", "ca")]))


class TestRunChecks:
    def test_run_checks(self, make_system):
        report = run_checks(make_system("abdc", [("ab", "c"), ("c", "d")]))
        assert [(rule.lhs, rule.rhs) for rule in report.right_reduced.rules] == [("ab", "d"), ("c", "d")]
        assert not report.classification.right_reduced
        assert report.convergent_forward_closed
        assert report.certificate.certified
        assert report.termination_provenance == "certified"

    def test_carried_provenance(self, make_system):
        system = make_system("abc", [("ab", "ca")]).vouched("assumed-flag")
        report = run_checks(system)
        assert report.termination_provenance == "assumed-flag"
        assert report.right_reduced.termination_provenance == "assumed-flag"
        assert report.original.assumptions == frozenset()

    def test_suite(self, suite_system):
        report = run_checks(suite_system)
        assert report.convergent_forward_closed
        assert report.right_reduced == suite_system

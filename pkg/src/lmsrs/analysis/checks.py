"""LM-condition checks.

Right-reduction, critical-pair confluence, the forward-closure decision, quasi-determinism of the rules and
of RHS(R), overlap diagnostics and the syntactic classification of a system.
"""

import functools
import logging
from collections import defaultdict
from itertools import combinations

from lmsrs.analysis.models import (
    AnalysisReport,
    ConfluenceReport,
    CriticalPair,
    DecisionEvidence,
    DistinctLhsReport,
    ForwardClosureCounterexample,
    ForwardClosureReport,
    NonJoinablePair,
    OverlapKind,
    OverlapReport,
    QuasiDetReport,
    RhsPair,
    RhsQuasiDetReport,
    SystemClassification,
)
from lmsrs.analysis.termination import check_termination_shortlex
from lmsrs.core.models import RewriteSystem, Rule
from lmsrs.core.rewriting import is_irreducible, normalize, preferred_rules
from lmsrs.core.words import overlaps
from lmsrs.evidence.providers import require_termination
from lmsrs.exceptions import SrsPreconditionError
from lmsrs.matcher.automaton import build_matcher, irreducible_reachable_states
from lmsrs.matcher.models import MatchAutomaton

logger = logging.getLogger(__name__)


def right_reduce(system: RewriteSystem) -> RewriteSystem:
    """Replace every rhs by its normal form.

    Left-hand sides are untouched, so IRR(R) and a single pass suffice: every new rhs is irreducible. Rules
    that become identical are merged, keeping the first. Declared assumptions carry over, since a convergent,
    forward-closed system stays so and has the same normal forms after right-reduction.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.
    """
    require_termination(system)
    rules: dict[tuple[str, str], Rule] = {}
    for rule in system.rules:
        reduced = Rule(lhs=rule.lhs, rhs=normalize(system, rule.rhs))
        if reduced != rule:
            logger.debug("Right-reduced %s to %s", rule, reduced)
        rules.setdefault((reduced.lhs, reduced.rhs), reduced)
    return system.with_rules(rules.values())


def is_right_reduced(system: RewriteSystem) -> bool:
    """Whether every rhs of `system` is irreducible."""
    return all(is_irreducible(system, rule.rhs) for rule in system.rules)


def critical_pairs(system: RewriteSystem) -> list[CriticalPair]:
    """Enumerate the critical pairs of `system`.

    For every ordered rule pair (a rule with itself included) and every proper suffix-prefix overlap
    `l1 = x·t`, `l2 = t·y` with `t`, `x`, `y` non-empty, the pair `(r1·y, x·r2)` comes from `x·t·y`. For every
    embedding `l2 = x·l1·y` of one rule's lhs in another's, the pair `(r2, x·r1·y)` comes from `l2`. The full
    overlap of a rule with itself is the only superposition left out.
    """
    pairs: list[CriticalPair] = []
    for (i, first), (j, second) in ((a, b) for a in enumerate(system.rules) for b in enumerate(system.rules)):
        l1, l2 = first.lhs, second.lhs
        for size in range(1, min(len(l1), len(l2))):
            if l1[-size:] == l2[:size]:
                x, y = l1[:-size], l2[size:]
                pairs.append(
                    CriticalPair(
                        left=first.rhs + y,
                        right=x + second.rhs,
                        superposition=l1 + y,
                        rules=(i, j),
                        kind=OverlapKind.SUFFIX_PREFIX,
                    ),
                )
        if i == j or len(l1) > len(l2):
            continue
        start = l2.find(l1)
        while start != -1:
            x, y = l2[:start], l2[start + len(l1) :]
            pairs.append(
                CriticalPair(
                    left=second.rhs,
                    right=x + first.rhs + y,
                    superposition=l2,
                    rules=(i, j),
                    kind=OverlapKind.EMBEDDING,
                ),
            )
            start = l2.find(l1, start + 1)
    return pairs


def check_confluence(system: RewriteSystem) -> ConfluenceReport:
    """Decide confluence of a terminating system by joining every critical pair.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.
    """
    require_termination(system)
    pairs = critical_pairs(system)
    failures = []
    for pair in pairs:
        left, right = normalize(system, pair.left), normalize(system, pair.right)
        if left != right:
            failures.append(NonJoinablePair(pair=pair, left_normal_form=left, right_normal_form=right))
    logger.debug("%d of %d critical pairs are not joinable", len(failures), len(pairs))
    return ConfluenceReport(confluent=not failures, critical_pair_count=len(pairs), non_joinable=tuple(failures))


def check_forward_closed(system: RewriteSystem) -> ForwardClosureReport:
    """Decide whether every innermost redex reaches its normal form in one step.

    Whether `x·l` is an innermost redex with l-part `l`, and whether a one-step reduct of it is irreducible,
    only depend on the matcher state reached by the irreducible `x`. So the decision runs over the finitely
    many states reachable along match-free paths: from each such state `q` and each lhs `l`, reading `l` must
    complete no lhs before its last symbol and end in a state whose longest match has length `|l|`. Then some
    lhs `l''` among all the matches there must have an rhs `r''` that reads match-free from the state reached
    before `l''`. The first state and lhs for which no `l''` qualifies give the counterexample, with the
    short-lex least s-part reaching that state.

    ???+ note

        The decision is exact for any terminating system, right-reduced or not, so forward closure can be
        compared before and after [`right_reduce`][(m).].

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.
    """
    require_termination(system)
    automaton = build_matcher(system)
    reachability = irreducible_reachable_states(automaton)
    preferred = preferred_rules(system)
    for state in reachability.reachable:
        for lhs in system.left_hand_sides:
            path = _l_part_path(automaton, state, lhs)
            if path is None or _has_irreducible_reduct(automaton, system, path):
                continue
            s_part = reachability.witnesses[state]
            logger.debug("Innermost redex %r has no irreducible one-step reduct", s_part + lhs)
            return ForwardClosureReport(
                holds=False,
                counterexample=ForwardClosureCounterexample(
                    s_part=s_part,
                    rule_index=preferred[lhs],
                    redex=s_part + lhs,
                ),
                states_examined=len(reachability.reachable),
            )
    return ForwardClosureReport(holds=True, states_examined=len(reachability.reachable))


def _l_part_path(automaton: MatchAutomaton, state: int, lhs: str) -> list[int] | None:
    """States met reading `lhs` from `state`, if that makes `lhs` the l-part of an innermost redex."""
    path = [state]
    for position, symbol in enumerate(lhs):
        path.append(automaton.goto_table[path[-1]][automaton.column(symbol)])
        if position < len(lhs) - 1 and automaton.is_match_state(path[-1]):
            return None
    longest = automaton.longest_match[path[-1]]
    if longest is None or len(automaton.patterns[longest]) != len(lhs):
        return None
    return path


def _has_irreducible_reduct(automaton: MatchAutomaton, system: RewriteSystem, path: list[int]) -> bool:
    """Whether rewriting some lhs suffix of the redex read along `path` leaves an irreducible word."""
    for match in automaton.all_matches[path[-1]]:
        state = path[len(path) - 1 - len(automaton.patterns[match])]
        for symbol in system.rules[match].rhs:
            state = automaton.goto_table[state][automaton.column(symbol)]
            if automaton.is_match_state(state):
                break
        else:
            return True
    return False


def check_quasi_deterministic(system: RewriteSystem) -> QuasiDetReport:
    """Evaluate the three quasi-determinism conditions on the rules of `system`.

    A rule is flagged for a λ rhs, or for being end-stable (both sides end with the same symbol). Two rules
    with non-empty rhs are flagged together when they share the unordered pair of rightmost symbols of their
    sides.
    """
    lambda_rhs = tuple(index for index, rule in enumerate(system.rules) if not rule.rhs)
    end_stable = tuple(
        index for index, rule in enumerate(system.rules) if rule.rhs and rule.lhs[-1] == rule.rhs[-1]
    )
    ends = [
        (index, frozenset((rule.lhs[-1], rule.rhs[-1]))) for index, rule in enumerate(system.rules) if rule.rhs
    ]
    repetitions = tuple((i, j) for (i, first), (j, second) in combinations(ends, 2) if first == second)
    return QuasiDetReport(
        holds=not (lambda_rhs or end_stable or repetitions),
        lambda_rhs=lambda_rhs,
        end_stable=end_stable,
        end_pair_repetitions=repetitions,
    )


def rhs_critical_pairs(system: RewriteSystem) -> list[RhsPair]:
    """Enumerate RHS(R): for distinct rules with `r2 = x·r1`, the pair `{x·l1, l2}`.

    Pairs equal as unordered sets of words are emitted once, in the order first found.
    """
    pairs: list[RhsPair] = []
    seen: set[frozenset[str]] = set()
    for (i, first), (j, second) in ((a, b) for a in enumerate(system.rules) for b in enumerate(system.rules)):
        if i == j or not second.rhs.endswith(first.rhs):
            continue
        extension = second.rhs[: len(second.rhs) - len(first.rhs)]
        key = frozenset((extension + first.lhs, second.lhs))
        if key in seen:
            continue
        seen.add(key)
        pairs.append(RhsPair(first=extension + first.lhs, second=second.lhs, extension=extension, rules=(i, j)))
    return pairs


def check_rhs_quasi_deterministic(system: RewriteSystem) -> RhsQuasiDetReport:
    """Evaluate quasi-determinism on RHS(R).

    A pair is flagged when its two words end with the same symbol. Two pairs are flagged together when they
    share the unordered pair of rightmost symbols.
    """
    pairs = rhs_critical_pairs(system)
    end_stable = tuple(index for index, pair in enumerate(pairs) if pair.first[-1] == pair.second[-1])
    repetitions = tuple(
        (i, j) for (i, first), (j, second) in combinations(enumerate(pairs), 2) if first.end_pair == second.end_pair
    )
    return RhsQuasiDetReport(
        holds=not (end_stable or repetitions),
        pairs=tuple(pairs),
        end_stable_pairs=end_stable,
        repetitions=repetitions,
    )


def overlap_diagnostics(system: RewriteSystem) -> OverlapReport:
    """List lhs-lhs overlaps (a lhs with itself included) and lhs-rhs overlaps, as ordered rule index pairs."""
    indexed = [(i, first, j, second) for i, first in enumerate(system.rules) for j, second in enumerate(system.rules)]
    return OverlapReport(
        lhs_lhs_overlaps=tuple((i, j) for i, first, j, second in indexed if overlaps(first.lhs, second.lhs)),
        lhs_rhs_overlaps=tuple((i, j) for i, first, j, second in indexed if overlaps(first.lhs, second.rhs)),
    )


def check_distinct_lhs(system: RewriteSystem) -> DistinctLhsReport:
    """Group rules sharing a left-hand side.

    A convergent, forward-closed, right-reduced system never has such a group, so one found there is evidence
    that an assumption about the system is false.
    """
    groups: dict[str, list[int]] = defaultdict(list)
    for index, rule in enumerate(system.rules):
        groups[rule.lhs].append(index)
    shared = tuple(tuple(group) for group in groups.values() if len(group) > 1)
    return DistinctLhsReport(holds=not shared, shared=shared)


def classify_system(system: RewriteSystem) -> SystemClassification:
    """Classify `system` as right-reduced, inter-reduced, special, monadic and/or dwindling."""
    right_reduced = is_right_reduced(system)
    embedded = any(
        i != j and first.lhs in second.lhs
        for i, first in enumerate(system.rules)
        for j, second in enumerate(system.rules)
    )
    return SystemClassification(
        right_reduced=right_reduced,
        inter_reduced=right_reduced and not embedded,
        special=all(not rule.rhs for rule in system.rules),
        monadic=all(len(rule.rhs) <= 1 for rule in system.rules),
        dwindling=all(len(rule.rhs) < len(rule.lhs) and rule.lhs.startswith(rule.rhs) for rule in system.rules),
    )


@functools.lru_cache(maxsize=128)
def require_decision_evidence(system: RewriteSystem) -> DecisionEvidence:
    """Gate for the collapse machine: right-reduced, terminating, confluent and forward-closed.

    Confluence and forward closure are verified unless the system declares them (`assume: confluent`,
    `assume: forward-closed`).

    Raises:
        SrsPreconditionError: If the system is not right-reduced, not confluent or not forward-closed.
        TerminationUnknownError: If it has no termination evidence.
    """
    termination = require_termination(system)
    if not is_right_reduced(system):
        msg = f"{system} is not right-reduced; right-reduce it first."
        raise SrsPreconditionError(msg)
    confluence = "assumed" if "confluent" in system.assumptions else "verified"
    if confluence == "verified" and not (report := check_confluence(system)).confluent:
        failure = report.non_joinable[0]
        msg = (
            f"{system} is not confluent: {failure.pair.superposition!r} has normal forms "
            f"{failure.left_normal_form!r} and {failure.right_normal_form!r}."
        )
        raise SrsPreconditionError(msg)
    forward_closure = "assumed" if "forward-closed" in system.assumptions else "verified"
    if forward_closure == "verified" and (counterexample := check_forward_closed(system).counterexample):
        msg = f"{system} is not forward-closed: innermost redex {counterexample.redex!r}."
        raise SrsPreconditionError(msg)
    return DecisionEvidence(
        termination=termination.provenance,
        confluence=confluence,
        forward_closure=forward_closure,
    )


def run_checks(system: RewriteSystem) -> AnalysisReport:
    """Run every analysis check.

    The system is right-reduced first and the checks refer to the right-reduced system, except for the
    classification, which describes the system as given.

    Raises:
        TerminationUnknownError: If `system` has no termination evidence.
    """
    logger.info("Analysing %d rules over %d symbols", len(system.rules), len(system.alphabet))
    termination = require_termination(system)
    reduced = right_reduce(system)
    return AnalysisReport(
        original=system,
        right_reduced=reduced,
        certificate=check_termination_shortlex(system),
        termination_provenance=termination.provenance,
        confluence=check_confluence(reduced),
        forward_closure=check_forward_closed(reduced),
        quasi_deterministic=check_quasi_deterministic(reduced),
        rhs_quasi_deterministic=check_rhs_quasi_deterministic(reduced),
        overlaps=overlap_diagnostics(reduced),
        distinct_lhs=check_distinct_lhs(reduced),
        classification=classify_system(system),
    )

"""Short-lex termination certificate."""

from lmsrs.analysis.models import TerminationCertificate, TerminationReason
from lmsrs.core.models import Ordering, RewriteSystem, Rule
from lmsrs.core.words import compare_shortlex


def rule_reason(rule: Rule, system: RewriteSystem) -> TerminationReason:
    """Classify a single rule against the short-lex order of `system`'s alphabet."""
    if len(rule.lhs) > len(rule.rhs):
        return TerminationReason.LENGTH_REDUCING
    if len(rule.lhs) == len(rule.rhs) and compare_shortlex(rule.lhs, rule.rhs, system.alphabet) is Ordering.GREATER:
        return TerminationReason.SHORTLEX_DECREASING
    return TerminationReason.NONE


def check_termination_shortlex(system: RewriteSystem) -> TerminationCertificate:
    """Certify termination when every rule strictly decreases in the short-lex order.

    ???+ note

        This is a sufficient condition only. `unknown` says nothing about the system: `{ab -> ca}` terminates
        under every precedence (each step removes a `b`), yet is only certified when `a` outranks `c`.

    Args:
        system (RewriteSystem): The system to certify. An empty system is certified.

    Returns:
        (TerminationCertificate): The verdict and the reason for every rule.
    """
    reasons = tuple(rule_reason(rule, system) for rule in system.rules)
    verdict = "unknown" if TerminationReason.NONE in reasons else "certified"
    return TerminationCertificate(verdict=verdict, per_rule=reasons)

import pytest

from lmsrs.exceptions import SrsInputError
from lmsrs.matcher.automaton import (
    advance,
    build_matcher,
    first_match,
    irreducible_reachable_states,
    scan,
)


class TestBuildMatcher:
    def test_states(self, make_system):
        automaton = build_matcher(make_system("abcd", [("ab", "c"), ("db", "ac")]))
        assert automaton.labels == ("", "a", "d", "ab", "db")
        assert automaton.state_count == 5
        assert automaton.longest_match == (None, None, None, 0, 1)

    def test_no_rules(self, make_system):
        automaton = build_matcher(make_system("ab"))
        assert automaton.state_count == 1
        assert all(target == automaton.root for target in automaton.goto_table[automaton.root])
        assert first_match(automaton, "abba") is None

    def test_failure_links(self, make_system):
        automaton = build_matcher(make_system("abc", [("abc", ""), ("bca", "")]))
        assert automaton.fail[automaton.state_of("ab")] == automaton.state_of("b")
        assert automaton.fail[automaton.state_of("abc")] == automaton.state_of("bc")
        assert automaton.fail_chain(automaton.state_of("abc")) == (
            automaton.state_of("abc"),
            automaton.state_of("bc"),
        )
        assert automaton.state_of("ca") is None

    def test_all_matches_longest_first(self, make_system):
        automaton = build_matcher(make_system("abc", [("b", "c"), ("ab", "c"), ("cab", "")]))
        state = scan(automaton, "cab")
        assert automaton.all_matches[state] == (2, 1, 0)
        assert automaton.longest_match[state] == 2

    def test_cached_per_system(self, make_system):
        assert build_matcher(make_system("abc", [("ab", "c")])) is build_matcher(make_system("abc", [("ab", "c")]))


class TestAdvance:
    def test_advance(self, make_system):
        automaton = build_matcher(make_system("abcd", [("ab", "c"), ("db", "ac")]))
        state, match = advance(automaton, automaton.root, "a")
        assert (automaton.labels[state], match) == ("a", None)
        state, match = advance(automaton, state, "b")
        assert (automaton.labels[state], match) == ("ab", 0)
        assert advance(automaton, state, "c") == (automaton.root, None)

    def test_unknown_symbol(self, make_system):
        automaton = build_matcher(make_system("ab", [("ab", "")]))
        with pytest.raises(SrsInputError):
            advance(automaton, automaton.root, "z")

    def test_scan_reports_longest_match(self, make_system):
        automaton = build_matcher(make_system("abcd", [("ab", "c"), ("db", "ac")]))
        assert automaton.longest_match[scan(automaton, "aab")] == 0
        assert first_match(automaton, "ddbab") == (3, 1)

    def test_matches_agree_with_substring_search(self, suite_system, rng):
        automaton = build_matcher(suite_system)
        symbols = suite_system.alphabet.symbols
        for _ in range(200):
            word = "".join(rng.choice(symbols) for _ in range(rng.randint(0, 10)))
            found = first_match(automaton, word)
            ends = [
                end
                for end in range(1, len(word) + 1)
                if any(word[:end].endswith(lhs) for lhs in suite_system.left_hand_sides)
            ]
            assert found == ((ends[0], automaton.longest_match[scan(automaton, word[: ends[0]])]) if ends else None)


class TestReachability:
    @pytest.mark.parametrize("symbols,rules,witnesses", [
        ("ab", [("aa", "a")], {"": "", "a": "a"}),
        ("abc", [("ab", "")], {"": "", "a": "a"}),
        ("ab", [], {"": ""}),
        ("abcd", [("ab", "c"), ("db", "ac")], {"": "", "a": "a", "d": "d"}),
    ])
    def test_irreducible_reachable_states(self, make_system, symbols, rules, witnesses):
        automaton = build_matcher(make_system(symbols, rules))
        info = irreducible_reachable_states(automaton)
        assert {automaton.labels[state]: word for state, word in info.witnesses.items()} == witnesses
        assert info.reachable[0] == automaton.root

import pytest
from pydantic import ValidationError

from lmsrs.core.models import Alphabet, Ordering, Rule
from lmsrs.core.rewriting import (
    decompose_normalization,
    is_irreducible,
    leftmost_innermost_redex,
    ll_derivation,
    ll_step,
    normalize,
    preferred_rules,
)
from lmsrs.core.words import compare_shortlex, overlaps, shortlex_key, to_monadic_term
from lmsrs.exceptions import SrsInputError, SrsPreconditionError, TerminationUnknownError


class TestModels:
    @pytest.mark.parametrize("symbols", ["", "a#", "a$", "aa", ["ab"], ["a", " "]])
    def test_invalid_alphabet(self, symbols):
        with pytest.raises(ValidationError):
            Alphabet.of(symbols)

    def test_alphabet(self):
        alphabet = Alphabet.of("cab")
        assert len(alphabet) == 3
        assert "a" in alphabet
        assert "d" not in alphabet
        assert alphabet.rank("c") == 0
        assert alphabet.ranks("ab") == (1, 2)
        with pytest.raises(SrsInputError):
            alphabet.rank("d")
        with pytest.raises(SrsInputError, match="'d'"):
            alphabet.check_word("cad")

    @pytest.mark.parametrize("rules", [
        [("ab", "d")],
        [("", "a")],
        [("ab", "c"), ("ab", "c")],
    ])
    def test_invalid_system(self, make_system, rules):
        with pytest.raises(ValidationError):
            make_system("abc", rules)

    def test_system(self, make_system):
        system = make_system("abcd", [("ab", "c"), ("ab", "d"), ("ba", "")], ["confluent"])
        assert system.left_hand_sides == ("ab", "ba")
        assert str(system) == "{ab -> c, ab -> d, ba -> eps}"
        assert system.assume("terminating").assumptions == {"confluent", "terminating"}
        assert system.with_rules([Rule(lhs="ab", rhs="c")]).assumptions == {"confluent"}
        assert system.model_dump(by_alias=True)["assumptions"] == ["confluent"]
        vouched = system.vouched("assumed-flag")
        assert vouched.assumptions == {"confluent"}
        assert vouched.with_rules([Rule(lhs="ab", rhs="c")]).termination_provenance == "assumed-flag"
        assert "terminationProvenance" not in vouched.model_dump(by_alias=True)
        assert vouched != system
        assert hash(system) == hash(make_system("abcd", [("ab", "c"), ("ab", "d"), ("ba", "")], ["confluent"]))


class TestWords:
    @pytest.mark.parametrize("a,b,symbols,expected", [
        ("b", "aa", "abc", Ordering.LESS),
        ("ab", "ca", "abc", Ordering.LESS),
        ("ab", "ab", "abc", Ordering.EQUAL),
        ("ab", "ca", "cab", Ordering.GREATER),
        ("", "a", "a", Ordering.LESS),
    ])
    def test_compare_shortlex(self, a, b, symbols, expected):
        assert compare_shortlex(a, b, Alphabet.of(symbols)) is expected

    def test_compare_shortlex_unknown_symbol(self):
        with pytest.raises(SrsInputError):
            compare_shortlex("ab", "zz", Alphabet.of("ab"))

    def test_shortlex_key_sorts(self):
        alphabet = Alphabet.of("ba")
        assert sorted(["a", "bb", "b", "ab", ""], key=lambda word: shortlex_key(word, alphabet)) == [
            "", "b", "a", "bb", "ab",
        ]

    @pytest.mark.parametrize("u,v,expected", [
        ("aba", "acc", True),
        ("aba", "cca", False),
        ("aba", "aba", True),
        ("a", "a", False),
        ("ab", "ba", True),
        ("", "a", False),
    ])
    def test_overlaps(self, u, v, expected):
        assert overlaps(u, v) is expected

    @pytest.mark.parametrize("word,term", [("gh", "h(g(x))"), ("a", "a(x)"), ("", "x")])
    def test_to_monadic_term(self, word, term):
        assert to_monadic_term(word) == term


class TestRewriting:
    @pytest.mark.parametrize("word,expected", [("ba", True), ("aab", False), ("", True)])
    def test_is_irreducible(self, make_system, word, expected):
        assert is_irreducible(make_system("abc", [("ab", "c")]), word) is expected

    def test_leftmost_innermost_redex(self, make_system):
        split = leftmost_innermost_redex(make_system("ab", [("aa", "a")]), "baaa")
        assert (split.s_part, split.l_part, split.end_position) == ("b", "aa", 3)
        split = leftmost_innermost_redex(make_system("abc", [("ab", "c")]), "ab")
        assert (split.s_part, split.l_part, split.rule_index) == ("", "ab", 0)
        assert leftmost_innermost_redex(make_system("abc", [("ab", "c")]), "ba") is None

    def test_leftmost_innermost_redex_takes_longest_lhs(self, make_system):
        system = make_system("abc", [("b", "c"), ("ab", "c")])
        split = leftmost_innermost_redex(system, "cab")
        assert (split.s_part, split.l_part, split.rule_index) == ("c", "ab", 1)

    def test_preferred_rule_has_least_rhs(self, make_system):
        system = make_system("abcd", [("ab", "d"), ("ab", "c")])
        assert preferred_rules(system) == {"ab": 1}
        assert ll_step(system, "ab") == "c"

    @pytest.mark.parametrize("symbols,rules,word,expected", [
        ("ab", [("aa", "a")], "baaa", "baa"),
        ("abc", [("ab", "c")], "ab", "c"),
        ("abc", [("ab", "c")], "ba", None),
    ])
    def test_ll_step(self, make_system, symbols, rules, word, expected):
        assert ll_step(make_system(symbols, rules), word) == expected

    @pytest.mark.parametrize("symbols,rules,word,expected", [
        ("ab", [("aa", "a")], "baaa", "ba"),
        ("abc", [("ab", "c")], "aab", "ac"),
        ("abc", [("ab", "c")], "", ""),
        ("cab", [("ab", "ca")], "abb", "cca"),
        ("abcde", [("ab", "c"), ("cd", "e")], "abdab", "ec"),
        ("ab", [("ab", ""), ("ba", "")], "aabbba", ""),
    ])
    def test_normalize(self, make_system, symbols, rules, word, expected):
        assert normalize(make_system(symbols, rules), word) == expected

    def test_normalize_agrees_with_derivation(self, suite_system, rng):
        symbols = suite_system.alphabet.symbols
        for _ in range(100):
            word = "".join(rng.choice(symbols) for _ in range(rng.randint(0, 12)))
            derivation = ll_derivation(suite_system, word)
            assert derivation[0] == word
            assert derivation[-1] == normalize(suite_system, word)
            assert is_irreducible(suite_system, derivation[-1])

    def test_normalize_requires_termination(self, make_system):
        system = make_system("abc", [("ab", "ca")])
        with pytest.raises(TerminationUnknownError):
            normalize(system, "ab")
        assert normalize(system.assume("terminating"), "abb") == "cca"

    def test_normalize_rejects_unknown_symbol(self, make_system):
        with pytest.raises(SrsInputError):
            normalize(make_system("abc", [("ab", "c")]), "abd")


class TestDecomposition:
    @pytest.mark.parametrize("symbols,rules,x,y,expected", [
        ("abc", [("ab", "c")], "a", "b", [("a", "b"), ("c", "")]),
        ("abc", [("ab", "c")], "a", "a", [("a", "a")]),
        ("ab", [("aa", "a")], "a", "a", [("a", "a"), ("a", "")]),
        ("abc", [("ab", "c"), ("cb", "a")], "a", "bbb", [("a", "b"), ("c", "b"), ("a", "b"), ("c", "")]),
    ])
    def test_decompose_normalization(self, make_system, symbols, rules, x, y, expected):
        steps = decompose_normalization(make_system(symbols, rules), x, y)
        assert [(step.xi, step.yi) for step in steps] == expected

    @pytest.mark.parametrize("symbols,rules,x,y", [
        ("abc", [("ab", "c")], "aab", ""),
        ("abc", [("ab", "c")], "a", "ab"),
        ("ab", [("aa", "a")], "a", "aa"),
    ])
    def test_reducible_argument(self, make_system, symbols, rules, x, y):
        with pytest.raises(SrsPreconditionError, match="reducible"):
            decompose_normalization(make_system(symbols, rules), x, y)

    def test_not_forward_closed(self, make_system):
        with pytest.raises(SrsPreconditionError, match="forward-closed"):
            decompose_normalization(make_system("ab", [("ab", "b")]), "aa", "b")

    def test_not_right_reduced(self, make_system):
        with pytest.raises(SrsPreconditionError, match="right-reduce"):
            decompose_normalization(make_system("abdc", [("ab", "c"), ("c", "d")]), "a", "b")

    def test_step_conditions(self, suite_system, irreducible_words, rng):
        words = irreducible_words(suite_system, 5)
        for _ in range(200):
            x, y = rng.choice(words), rng.choice(words)
            steps = decompose_normalization(suite_system, x, y)
            assert steps[0].xi == x
            assert "".join(step.yi for step in steps) == y
            assert steps[-1].xi + steps[-1].yi == normalize(suite_system, x + y)
            for step, following in zip(steps, steps[1:]):
                assert is_irreducible(suite_system, step.xi)
                assert step.yi
                assert is_irreducible(suite_system, step.xi + step.yi[:-1])
                assert ll_step(suite_system, step.xi + step.yi) == following.xi
            assert is_irreducible(suite_system, steps[-1].xi)
            assert is_irreducible(suite_system, steps[-1].xi + steps[-1].yi)

import random

import pytest

from lmsrs.core.models import RewriteSystem
from lmsrs.core.rewriting import is_irreducible
from lmsrs.oracle.models import SearchBudget
from lmsrs.utils import shortlex_words

# Convergent, forward-closed, right-reduced systems with certified termination.
SUITE = [
    ("abc", [("ab", "c")]),
    ("ab", [("aa", "a")]),
    ("cab", [("ab", "ca")]),
    ("ab", [("aa", "")]),
    ("ab", [("ab", "")]),
    ("ab", [("ab", ""), ("ba", "")]),
    ("abcd", [("abc", "d")]),
    ("abcde", [("ab", "c"), ("cd", "e")]),
    ("abc", [("ab", "c"), ("cb", "a")]),
    ("ab", [("ab", "a")]),
    ("abc", [("abc", "b")]),
    ("ab", [("aa", "a"), ("bb", "b")]),
    ("abc", [("abc", "")]),
    ("abc", [("cab", "c")]),
    ("abcd", [("ab", "c")]),
    ("cdab", [("ab", "cd")]),
    ("cdefab", [("ab", "dc"), ("ef", "dd")]),
    ("abcd", [("ab", "c"), ("db", "ac")]),
    ("abcd", [("ab", "c"), ("cd", "ac")]),
    ("ab", [("ba", "")]),
    ("ab", [("aaa", "a")]),
    ("abc", [("aab", "c")]),
]

NOT_FORWARD_CLOSED = ("ab", [("ab", "b")])
NOT_FORWARD_CLOSED_SWAP = ("ab", [("ba", "ab")])
NOT_CONFLUENT = ("abc", [("ab", "c"), ("ba", "c")])
SHARED_LHS = ("abcd", [("ab", "c"), ("ab", "d")])

# Longest enumerated word per alphabet size. Caps are enumerated layer by layer, so 8 is affordable up to three
# symbols; collapse search pairs every irreducible x with every y and stops earlier.
CAP_BOUNDS = {2: 8, 3: 8, 4: 6, 5: 5, 6: 4}
COLLAPSE_BOUNDS = {2: 6, 3: 5, 4: 3, 5: 2, 6: 2}
WORD_BOUNDS = {2: 8, 3: 5, 4: 4, 5: 3, 6: 3}


def suite_id(entry) -> str:
    symbols, rules = entry
    return f"{symbols}:" + ",".join(f"{lhs}>{rhs or 'eps'}" for lhs, rhs in rules)


@pytest.fixture
def make_system():
    def _make_system(symbols, rules=(), assumptions=()) -> RewriteSystem:
        return RewriteSystem.of(symbols, rules, assumptions)
    return _make_system


@pytest.fixture
def suite_systems():
    return [RewriteSystem.of(symbols, rules) for symbols, rules in SUITE]


@pytest.fixture(params=SUITE, ids=suite_id)
def suite_system(request):
    symbols, rules = request.param
    return RewriteSystem.of(symbols, rules)


@pytest.fixture
def irreducible_words():
    def _irreducible_words(system: RewriteSystem, max_length: int, min_length: int = 0) -> list[str]:
        return [
            word
            for word in shortlex_words(system.alphabet.symbols, max_length, min_length)
            if is_irreducible(system, word)
        ]
    return _irreducible_words


@pytest.fixture
def cap_budget():
    def _cap_budget(system: RewriteSystem) -> SearchBudget:
        return SearchBudget(max_word_length=CAP_BOUNDS[len(system.alphabet)])
    return _cap_budget


@pytest.fixture
def collapse_budget():
    def _collapse_budget(system: RewriteSystem) -> SearchBudget:
        return SearchBudget(max_word_length=COLLAPSE_BOUNDS[len(system.alphabet)])
    return _collapse_budget


@pytest.fixture
def word_bound():
    def _word_bound(system: RewriteSystem) -> int:
        return WORD_BOUNDS[len(system.alphabet)]
    return _word_bound


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def system_file(tmp_path):
    def _system_file(text: str, name: str = "system.srs") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _system_file

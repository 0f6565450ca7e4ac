"""The `.srs` system file format.

```text
# comments start with '#'
alphabet: a b c
assume: terminating
rules:
ab -> c
ba -> eps
```

The alphabet is listed in ascending precedence. `eps` spells λ. `assume:` may appear anywhere after the
alphabet and names any of `terminating`, `confluent`, `forward-closed`.
"""

import logging
from pathlib import Path

from pydantic import ValidationError

from lmsrs._types import ASSUMPTIONS, Assumption
from lmsrs.core.models import EPSILON, Alphabet, RewriteSystem, Rule, SrsModel
from lmsrs.exceptions import SystemFileError

logger = logging.getLogger(__name__)

ARROW = "->"


class SystemFile(SrsModel):
    """A parsed system file.

    Attributes:
        path (str | None): Where it was read from, if anywhere.
        system (RewriteSystem): The system, with the declared assumptions.
    """

    path: str | None = None
    system: RewriteSystem

    @property
    def assumptions(self) -> frozenset[Assumption]:
        """The assumptions the file declares."""
        return self.system.assumptions


def _parse_word(token: str, alphabet: Alphabet, line_number: int) -> str:
    word = "" if token == EPSILON else token
    for symbol in word:
        if symbol not in alphabet:
            raise SystemFileError(line_number, f"symbol {symbol!r} not declared")
    return word


def parse_system_file(text: str, path: str | None = None) -> SystemFile:
    """Parse the text of a system file.

    Args:
        text (str): The file content.
        path (str, optional): Recorded on the result. Defaults to None.

    Raises:
        SystemFileError: On a missing section, an unknown symbol or assumption, an empty lhs, a duplicate rule,
            or a malformed line, with the line number.

    Returns:
        (SystemFile): The parsed file.
    """
    alphabet: Alphabet | None = None
    rules: list[Rule] = []
    first_seen: dict[Rule, int] = {}
    assumptions: set[Assumption] = set()
    in_rules = False
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(":")
        keyword = keyword.strip()
        if ARROW not in line and keyword == "alphabet":
            if alphabet is not None:
                raise SystemFileError(line_number, "alphabet declared twice")
            try:
                alphabet = Alphabet(symbols=tuple(rest.split()))
            except ValidationError as exc:
                raise SystemFileError(line_number, exc.errors()[0]["msg"]) from None
        elif alphabet is None:
            raise SystemFileError(line_number, "expected 'alphabet:' first")
        elif ARROW not in line and keyword == "assume":
            for token in rest.split():
                if token not in ASSUMPTIONS:
                    raise SystemFileError(line_number, f"unknown assumption {token!r}")
                assumptions.add(token)
        elif ARROW not in line and keyword == "rules" and not rest.strip():
            in_rules = True
        elif not in_rules:
            raise SystemFileError(line_number, "expected 'rules:' before the first rule")
        elif ARROW not in line:
            raise SystemFileError(line_number, f"expected 'LHS {ARROW} RHS', got {line!r}")
        else:
            lhs_token, _, rhs_token = (part.strip() for part in line.partition(ARROW))
            lhs = _parse_word(lhs_token, alphabet, line_number)
            if not lhs:
                raise SystemFileError(line_number, "empty left-hand side")
            rule = Rule(lhs=lhs, rhs=_parse_word(rhs_token, alphabet, line_number))
            if rule in first_seen:
                raise SystemFileError(line_number, f"duplicate rule {rule} (first on line {first_seen[rule]})")
            first_seen[rule] = line_number
            rules.append(rule)
    if alphabet is None:
        raise SystemFileError(0, "missing 'alphabet:' section")
    if not in_rules:
        raise SystemFileError(0, "missing 'rules:' section")
    logger.debug("Parsed %d rules over %d symbols from %s", len(rules), len(alphabet), path or "<text>")
    system = RewriteSystem(alphabet=alphabet, rules=tuple(rules), assumptions=frozenset(assumptions))
    return SystemFile(path=path, system=system)


def format_system_file(system_file: SystemFile) -> str:
    """Serialise a system file so that parsing the result gives back the same system."""
    system = system_file.system
    lines = [f"alphabet: {' '.join(system.alphabet.symbols)}"]
    if system.assumptions:
        lines.append(f"assume: {' '.join(sorted(system.assumptions))}")
    lines.append("rules:")
    lines.extend(str(rule) for rule in system.rules)
    return "\n".join(lines) + "\n"


def load_system_file(path: str | Path) -> SystemFile:
    """Read and parse the UTF-8 system file at `path`.

    Raises:
        OSError: If the file cannot be read.
        SystemFileError: If it does not parse.
    """
    return parse_system_file(Path(path).read_text(encoding="utf-8"), path=str(path))

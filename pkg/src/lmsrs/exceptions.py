"""lm-srs Exceptions."""


class SrsInputError(ValueError):
    """Malformed input: a symbol outside the alphabet, a bad end marker, or an unusable word.

    Works like any other `ValueError`. Pass a `str` message to the constructor and it will be raised.
    """


class SystemFileError(SrsInputError):
    """`.srs` system file parse error."""

    def __init__(self, line_number: int, message: str) -> None:
        """Initialize the parse error.

        Formats the message with the offending line so the CLI can print it as is.

        Args:
            line_number (int): 1-based line of the system file the error was found on. `0` means the error
                concerns the file as a whole (e.g. a missing section).
            message (str): What was wrong with the line.
        """
        self.line_number = line_number
        self.message = message
        msg = f"line {line_number}: {message}" if line_number else message
        super().__init__(msg)


class SrsPreconditionError(Exception):
    """Base `Exception` for operations called on a system or word that violates their precondition.

    Raised, for example, when a word that must be irreducible contains a left-hand side, when a system
    has not been right-reduced, or when confluence or forward closure can be neither verified nor assumed.
    """


class TerminationUnknownError(SrsPreconditionError):
    """No provider in the [EvidenceProviderChain][src.lmsrs.evidence.providers.] could vouch for termination."""


class PdaInvariantError(RuntimeError):
    """The collapse pushdown machine reached a configuration its construction rules out.

    This can only happen when a declared assumption (`confluent`, `forward-closed`) is false for the system.
    """


class OracleDisagreementError(RuntimeError):
    """A decision procedure and the brute-force oracle disagree.

    Attributes:
        command (str): The decision that was cross-checked.
        counterexample (dict): The smallest input that exposes the disagreement, with both answers.
    """

    def __init__(self, command: str, counterexample: dict) -> None:
        """Initialize the disagreement error.

        Args:
            command (str): The decision that was cross-checked (e.g. `cap`).
            counterexample (dict): The minimized input and the two conflicting answers.
        """
        self.command = command
        self.counterexample = counterexample
        details = ", ".join(f"{key}={value!r}" for key, value in counterexample.items())
        super().__init__(f"Oracle disagreement on {command}: {details}")

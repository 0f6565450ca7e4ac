"""Report Models for the command-line interface."""

from typing import Any, Literal

from pydantic import Field

from lmsrs.core.models import SrsModel

SCHEMA_VERSION = "1"


class ReportEnvelope(SrsModel):
    """The JSON document every command prints with `--json`.

    Identical inputs give identical envelopes except for `timingMs`.

    Attributes:
        schema_version (str): Version of this envelope's schema.
        tool_version (str): `lmsrs.__version__`.
        command (str): The subcommand.
        input_digest (str): SHA-256 over the command, the system file in canonical form and the word arguments.
        payload (dict[str, Any]): The verdict model, dumped with camelCase keys.
        provenance (str): Provenance of the termination evidence the verdict rests on, `unknown` without any.
        timing_ms (float): Wall-clock time of the command.
    """

    schema_version: Literal["1"] = SCHEMA_VERSION
    tool_version: str
    command: str
    input_digest: str
    payload: dict[str, Any] = Field(default_factory=dict)
    provenance: str
    timing_ms: float


class CommandOutcome(SrsModel):
    """What a command hands back to `main`: the exit code and the text to print.

    Attributes:
        exit_code (int): `0` holds, `1` fails, `2` input or precondition error, `3` inconclusive,
            `4` oracle disagreement.
        output (str): Report text or JSON, or the error message.
        error (bool): Print `output` on stderr rather than stdout.
    """

    exit_code: int
    output: str
    error: bool = False

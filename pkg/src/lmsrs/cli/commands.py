"""The `lmsrs` command.

```text
lmsrs check FILE
lmsrs normalize FILE WORD [--term]
lmsrs collapse FILE
lmsrs cap FILE -u WORD -v WORD
lmsrs lm FILE
lmsrs explain FILE -u WORD -v WORD -w WORD
lmsrs schema
```

Exit codes: `0` the property holds or the query is derivable, `1` it fails or is not derivable, `2` input or
precondition error, `3` inconclusive (termination neither certified nor assumed), `4` oracle disagreement.
"""

import argparse
import json
import logging
import sys
import time
from collections.abc import Callable
from pathlib import Path

from pydantic import ValidationError

from lmsrs import __version__
from lmsrs.analysis.models import AnalysisReport
from lmsrs.analyzer import Analyzer
from lmsrs.cli.reports import CommandOutcome, ReportEnvelope
from lmsrs.cli.systemfile import format_system_file, load_system_file
from lmsrs.core.models import EPSILON, NormalizationResult, SrsModel
from lmsrs.decide.models import CapResult, CollapseVerdict, LmReport
from lmsrs.exceptions import (
    OracleDisagreementError,
    PdaInvariantError,
    SrsInputError,
    SrsPreconditionError,
    TerminationUnknownError,
)
from lmsrs.pushdown.models import RunTrace
from lmsrs.utils import digest

logger = logging.getLogger(__name__)

Handler = Callable[[Analyzer, argparse.Namespace], tuple[int, SrsModel, list[str]]]


def _word(token: str) -> str:
    return "" if token == EPSILON else token


def _yes(flag: bool) -> str:  # noqa: FBT001
    return "yes" if flag else "no"


def _render_checks(report: AnalysisReport) -> list[str]:
    lines = [
        f"system: {report.original}",
        f"right-reduced: {report.right_reduced}",
        f"termination certificate: {report.certificate.verdict}",
        f"confluent: {_yes(report.confluence.confluent)} ({report.confluence.critical_pair_count} critical pairs)",
    ]
    lines.extend(
        f"  {failure.pair.superposition!r} -> {failure.left_normal_form!r} / {failure.right_normal_form!r}"
        for failure in report.confluence.non_joinable
    )
    lines.append(f"forward-closed: {_yes(report.forward_closure.holds)}")
    if report.forward_closure.counterexample:
        lines.append(f"  innermost redex {report.forward_closure.counterexample.redex!r}")
    lines.append(f"quasi-deterministic: {_yes(report.quasi_deterministic.holds)}")
    rhs_report = report.rhs_quasi_deterministic
    lines.append(f"RHS(R) quasi-deterministic: {_yes(rhs_report.holds)} ({len(rhs_report.pairs)} pairs)")
    lines.append(f"distinct left-hand sides: {_yes(report.distinct_lhs.holds)}")
    classes = [name for name, value in report.classification.model_dump().items() if value]
    lines.append(f"classification: {', '.join(classes) or 'none'}")
    return lines


def _check(analyzer: Analyzer, args: argparse.Namespace) -> tuple[int, SrsModel, list[str]]:  # noqa: ARG001
    report = analyzer.check()
    return (0 if report.convergent_forward_closed else 1), report, _render_checks(report)


def _normalize(analyzer: Analyzer, args: argparse.Namespace) -> tuple[int, NormalizationResult, list[str]]:
    result = analyzer.normalize(_word(args.word), trace=args.trace)
    lines = [f"{word or EPSILON} ->" for word in (result.derivation or ())[:-1]]
    lines.append(result.normal_form or EPSILON)
    if args.term:
        lines.append(result.monadic_term)
    return 0, result, lines


def _collapse(analyzer: Analyzer, args: argparse.Namespace) -> tuple[int, CollapseVerdict, list[str]]:  # noqa: ARG001
    verdict = analyzer.collapse()
    if verdict.witness is None:
        return 0, verdict, ["non-collapsing"]
    witness = verdict.witness
    rhs = witness.rhs or EPSILON
    return 1, verdict, [f"collapsing: rhs {rhs!r} (rule {witness.rule_index}), y={witness.extension!r}"]


def _cap(analyzer: Analyzer, args: argparse.Namespace) -> tuple[int, CapResult, list[str]]:
    result = analyzer.cap(_word(args.u), _word(args.v))
    if result.cap_term is None:
        return 1, result, ["not derivable"]
    return 0, result, [f"derivable: cap term {result.cap_term!r}"]


def _lm(analyzer: Analyzer, args: argparse.Namespace) -> tuple[int, LmReport, list[str]]:  # noqa: ARG001
    report = analyzer.lm()
    lines = [f"status: {report.status}", f"termination: {report.termination_provenance or 'unknown'}"]
    if report.collapse is not None:
        lines.append(f"subterm-collapsing: {_yes(report.collapse.collapsing)}")
    for name in ("confluence", "forward_closure", "rhs_quasi_deterministic"):
        stage = getattr(report, name)
        if stage is not None:
            holds = stage.confluent if name == "confluence" else stage.holds
            lines.append(f"{name.replace('_', ' ')}: {_yes(holds)}")
    if report.stages_skipped:
        lines.append(f"skipped: {', '.join(report.stages_skipped)}")
    if report.status == "inconclusive":
        return 3, report, lines
    return (0 if report.is_lm else 1), report, lines


def _explain(analyzer: Analyzer, args: argparse.Namespace) -> tuple[int, RunTrace, list[str]]:
    trace = analyzer.explain(_word(args.u), _word(args.v), _word(args.w))
    lines = [f"start  ${trace.initial_stack}"]
    for item in trace.steps:
        rule = "" if item.rule_index is None else f" rule {item.rule_index}"
        lines.append(f"{item.symbol}  {item.transition}{rule}  ${item.stack}")
    lines.append("accepted" if trace.accepted else "rejected")
    return (0 if trace.accepted else 1), trace, lines


HANDLERS: dict[str, Handler] = {
    "check": _check,
    "normalize": _normalize,
    "collapse": _collapse,
    "cap": _cap,
    "lm": _lm,
    "explain": _explain,
}


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the `lmsrs` command."""
    parser = argparse.ArgumentParser(prog="lmsrs", description="Analyse string rewriting systems.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", type=Path, help="system file")
    common.add_argument("--json", action="store_true", help="print the JSON report envelope")
    common.add_argument("--assume-terminating", action="store_true", help="assume termination if not certified")
    common.add_argument("--oracle", type=int, metavar="N", help="cross-check against brute force up to length N")
    common.add_argument("--trace", action="store_true", help="include the leftmost-largest derivation")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("check", parents=[common], help="run every analysis check")
    normalize = commands.add_parser("normalize", parents=[common], help="print the normal form of a word")
    normalize.add_argument("word", help="the word, 'eps' for the empty word")
    normalize.add_argument("--term", action="store_true", help="also print it as a monadic term")
    commands.add_parser("collapse", parents=[common], help="decide subterm collapse")
    cap = commands.add_parser("cap", parents=[common], help="solve a cap query")
    cap.add_argument("-u", required=True, help="intruder knowledge")
    cap.add_argument("-v", required=True, help="secret")
    commands.add_parser("lm", parents=[common], help="decide whether the system is an LM-system")
    explain = commands.add_parser("explain", parents=[common], help="trace the collapse machine on a word")
    explain.add_argument("-u", required=True, help="initial stack")
    explain.add_argument("-v", required=True, help="accepting stack")
    explain.add_argument("-w", required=True, help="input, without the end marker")
    commands.add_parser("schema", help="print the JSON schema of the report envelope")
    return parser


def execute(args: argparse.Namespace) -> CommandOutcome:
    """Run a parsed command and map its verdict or error to an exit code."""
    if args.command == "schema":
        return CommandOutcome(exit_code=0, output=json.dumps(ReportEnvelope.model_json_schema(by_alias=True), indent=2))
    started = time.perf_counter()
    try:
        system_file = load_system_file(args.file)
        analyzer = Analyzer(
            system_file.system,
            assume_terminating=args.assume_terminating,
            oracle_bound=args.oracle,
        )
        exit_code, verdict, lines = HANDLERS[args.command](analyzer, args)
    except TerminationUnknownError as exc:
        return CommandOutcome(exit_code=3, output=f"inconclusive: {exc}", error=True)
    except OracleDisagreementError as exc:
        return CommandOutcome(exit_code=4, output=f"{exc}\n{json.dumps(exc.counterexample, indent=2)}", error=True)
    except (SrsInputError, SrsPreconditionError, PdaInvariantError, ValidationError, OSError) as exc:
        return CommandOutcome(exit_code=2, output=f"error: {exc}", error=True)
    if not args.json:
        return CommandOutcome(exit_code=exit_code, output="\n".join(lines))
    words = [getattr(args, name) for name in ("word", "u", "v", "w") if getattr(args, name, None) is not None]
    envelope = ReportEnvelope(
        tool_version=__version__,
        command=args.command,
        input_digest=digest(args.command, format_system_file(system_file), *words),
        payload=verdict.model_dump(mode="json", by_alias=True),
        provenance=analyzer.provenance,
        timing_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    return CommandOutcome(exit_code=exit_code, output=envelope.model_dump_json(by_alias=True, indent=2))


def run_command(argv: list[str]) -> CommandOutcome:
    """Parse `argv` and run the command.

    Raises:
        SystemExit: With code `2` when `argv` does not parse, as argparse does.
    """
    return execute(build_parser().parse_args(argv))


def main(argv: list[str] | None = None) -> int:
    """Entry point of the `lmsrs` console script."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    outcome = execute(args)
    print(outcome.output, file=sys.stderr if outcome.error else sys.stdout)
    return outcome.exit_code

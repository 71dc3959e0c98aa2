"""
Command-line front end.

Payload goes to --output (default standard output); diagnostics and logs go
to standard error. Exit status: 0 success, 1 invalid word/matrix, 2 usage or
I/O error.
"""
import argparse
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from src import __version__
from src.commands import EXIT_DOMAIN_ERROR, EXIT_USAGE_ERROR, UsageError, checks, conversion
from src.config_manager import ConfigManager
from src.dyck_core import CANONICAL, Alphabet
from src.errors import DyckError
from src.verification import BijectionVerifier

logger = logging.getLogger(__name__)


class CliConfig(BaseModel):
    command: str
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    alphabet: str = "xD"
    max_n: Optional[int] = Field(default=None, ge=0)

    @field_validator("alphabet")
    @classmethod
    def check_alphabet(cls, value: str) -> str:
        if len(value) != 2:
            raise ValueError(f"alphabet must be exactly two characters, got {value!r}")
        if value[0] == value[1]:
            raise ValueError(f"alphabet characters must be distinct, got {value!r}")
        if not all(ch.isascii() and ch.isprintable() and not ch.isspace() for ch in value):
            raise ValueError(f"alphabet characters must be printable ASCII, got {value!r}")
        return value

    def requested_max_n(self, default: int) -> int:
        return default if self.max_n is None else self.max_n


def configure_logging(config: ConfigManager) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = config.get_log_file()
    file_error: Optional[OSError] = None
    if log_file:
        try:
            handlers.append(logging.FileHandler(log_file))
        except OSError as e:
            file_error = e
    logging.basicConfig(
        level=getattr(logging, config.get_log_level(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )
    if file_error is not None:
        logger.warning(f"Cannot open log file {log_file}, logging to stderr only: {file_error}")


class DyckApp:
    """State shared by the command modules: settings, I/O sinks and the verifier."""

    def __init__(self, config: ConfigManager):
        self.config = config
        self.verifier = BijectionVerifier(config)
        self.cli: Optional[CliConfig] = None

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.from_pair(self.cli.alphabet)

    @contextmanager
    def open_input(self) -> Iterator[IO[str]]:
        if self.cli.input_path is None:
            yield sys.stdin
            return
        with open(self.cli.input_path, "r", encoding="utf-8") as f:
            yield f

    @contextmanager
    def open_output(self) -> Iterator[IO[str]]:
        if self.cli.output_path is None:
            yield sys.stdout
            return
        with open(self.cli.output_path, "w", encoding="utf-8", newline="\n") as f:
            yield f

    def emit(self, text: str) -> None:
        with self.open_output() as out:
            out.write(text + "\n")

    def word_chars(self, text: Optional[str]) -> Iterator[str]:
        """Characters of a word argument or of the input stream, minus one trailing newline."""
        if text is not None:
            return strip_one_newline(iter(text))
        return self._stream_chars()

    def _stream_chars(self) -> Iterator[str]:
        with self.open_input() as f:
            yield from strip_one_newline(iter(lambda: f.read(1), ""))

    def read_all(self, text: Optional[str] = None) -> str:
        if text is not None:
            return text
        with self.open_input() as f:
            return f.read()


def strip_one_newline(chars: Iterator[str]) -> Iterator[str]:
    """Pass characters through, holding one back so a single final newline can be dropped."""
    pending = None
    for char in chars:
        if pending is not None:
            yield pending
        pending = char
    if pending is not None and pending != "\n":
        yield pending


def build_parser(app: DyckApp) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="two characters read as x and D (default from DYCK_ALPHABET)")
    common.add_argument("--input", type=Path, help="read from this file instead of standard input")
    common.add_argument("--output", type=Path, help="write to this file instead of standard output")
    common.add_argument("--max-n", type=int, help="semilength bound for enumerate / roundtrip-check")
    common.set_defaults(uses_alphabet=True)

    parser = argparse.ArgumentParser(
        prog="dyck",
        description="Dyck words, Dyck matrices and ordered Eulerian digraphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    conversion.setup(subparsers, common, app)
    checks.setup(subparsers, common, app)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    config = ConfigManager()
    configure_logging(config)
    for issue in config.validate_config():
        logger.warning(f"Configuration issue: {issue}")

    app = DyckApp(config)
    parser = build_parser(app)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    alphabet = args.alphabet or config.get_alphabet()
    if args.alphabet is None and not args.uses_alphabet:
        # config reports a bad DYCK_ALPHABET as an issue instead
        alphabet = CANONICAL.pair
    try:
        app.cli = CliConfig(
            command=args.command,
            input_path=args.input,
            output_path=args.output,
            alphabet=alphabet,
            max_n=args.max_n,
        )
    except ValidationError as e:
        for error in e.errors():
            print(f"usage error: {error['loc'][0]}: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    logger.info(f"Running {args.command}")
    try:
        status = args.handler(args)
    except DyckError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (OSError, UnicodeDecodeError) as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    logger.info(f"{args.command} finished with status {status}")
    return status

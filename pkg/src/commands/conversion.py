import argparse
import logging

from src.commands import EXIT_OK
from src.convert import get_matrix, iter_word_from_rows
from src.digraph import matrix_to_digraph, to_dot
from src.dyck_core import DyckWord, parse_word, to_path
from src.matrix import iter_matrix_rows, parse_matrix_text, validate_matrix

logger = logging.getLogger(__name__)

MATRIX_CHARS = frozenset("01 \n")


class ConversionCommands:
    def __init__(self, app):
        self.app = app

    def cmd_validate(self, args: argparse.Namespace) -> int:
        """Check a word; prints 'OK <semilength>'"""
        word = parse_word(self.app.word_chars(args.word), self.app.alphabet)
        self.app.emit(f"OK {word.semilength}")
        return EXIT_OK

    def cmd_to_matrix(self, args: argparse.Namespace) -> int:
        """Stream a word into its Dyck matrix"""
        matrix = get_matrix(self.app.word_chars(args.word), self.app.alphabet)
        logger.info(f"Built a {matrix.n}x{matrix.k} matrix")
        self.app.emit(matrix.to_text())
        return EXIT_OK

    def cmd_to_word(self, args: argparse.Namespace) -> int:
        """Read a matrix row by row and print its Dyck word"""
        with self.app.open_input() as f:
            word = DyckWord(tuple(iter_word_from_rows(iter_matrix_rows(f))))
        self.app.emit(str(word))
        return EXIT_OK

    def cmd_to_digraph(self, args: argparse.Namespace) -> int:
        """DOT text for the digraph of a word or of a matrix"""
        text = self.app.read_all(args.word)
        source = args.source
        if source == "auto":
            source = "matrix" if self._looks_like_matrix(text) else "word"
        logger.info(f"to-digraph reading a {source}")

        if source == "matrix":
            matrix = validate_matrix(parse_matrix_text(text))
        else:
            matrix = get_matrix(self.app.word_chars(text), self.app.alphabet)
        self.app.emit(to_dot(matrix_to_digraph(matrix)))
        return EXIT_OK

    def _looks_like_matrix(self, text: str) -> bool:
        if set(self.app.cli.alphabet) <= {"0", "1"}:
            return False
        return bool(text.strip()) and set(text) <= MATRIX_CHARS

    def cmd_path(self, args: argparse.Namespace) -> int:
        """ASCII grid of the word's lattice path"""
        word = parse_word(self.app.word_chars(args.word), self.app.alphabet)
        self.app.emit(to_path(word).render_grid())
        return EXIT_OK


def setup(subparsers, common: argparse.ArgumentParser, app) -> None:
    commands = ConversionCommands(app)

    validate = subparsers.add_parser("validate", parents=[common], help="check a Dyck word")
    validate.add_argument("word", nargs="?", help="the word (default: read the input)")
    validate.set_defaults(handler=commands.cmd_validate)

    to_matrix = subparsers.add_parser("to-matrix", parents=[common], help="Dyck word -> Dyck matrix")
    to_matrix.add_argument("word", nargs="?", help="the word (default: stream the input)")
    to_matrix.set_defaults(handler=commands.cmd_to_matrix)

    to_word = subparsers.add_parser("to-word", parents=[common], help="Dyck matrix -> Dyck word")
    to_word.set_defaults(handler=commands.cmd_to_word)

    to_digraph = subparsers.add_parser("to-digraph", parents=[common], help="word or matrix -> DOT digraph")
    to_digraph.add_argument("word", nargs="?", help="a word (default: read the input)")
    to_digraph.add_argument("--from", dest="source", choices=("auto", "word", "matrix"), default="auto")
    to_digraph.set_defaults(handler=commands.cmd_to_digraph)

    path = subparsers.add_parser("path", parents=[common], help="ASCII picture of the Dyck path")
    path.add_argument("word", nargs="?", help="the word (default: read the input)")
    path.set_defaults(handler=commands.cmd_path)

import argparse
import logging

from src.commands import EXIT_DOMAIN_ERROR, EXIT_OK, UsageError
from src.dyck_core import enumerate_words, render

logger = logging.getLogger(__name__)

MAX_WITNESSES = 20


def format_cycle_system(system) -> str:
    return " ".join("(" + ",".join(f"v{v}" for v in cycle) + ")" for cycle in system)


class CheckCommands:
    def __init__(self, app):
        self.app = app

    def cmd_enumerate(self, args: argparse.Namespace) -> int:
        """All Dyck words up to --max-n, or of exactly --max-n with --exact"""
        max_n = self.app.verifier.clamp(self.app.cli.requested_max_n(self.app.config.get_default_max_n()))
        semilengths = [max_n] if args.exact else range(1, max_n + 1)
        alphabet = self.app.alphabet
        with self.app.open_output() as out:
            for n in semilengths:
                for word in enumerate_words(n):
                    out.write(render(word, alphabet) + "\n")
        return EXIT_OK

    def cmd_roundtrip_check(self, args: argparse.Namespace) -> int:
        """Run both roundtrips and every invariant for n = 1..max-n"""
        max_n = self.app.verifier.clamp(self.app.cli.requested_max_n(self.app.config.get_default_max_n()))
        if max_n < 1:
            raise UsageError("roundtrip-check needs --max-n of at least 1")

        lines = []
        all_passed = True
        for report in self.app.verifier.check_up_to(max_n):
            verdict = "PASS" if report.passed else "FAIL"
            lines.append(
                f"n={report.n} words={report.word_count} catalan={report.catalan} "
                f"matrices={report.matrix_count} {verdict}"
            )
            for witness in report.failures[:MAX_WITNESSES]:
                lines.append(f"  witness: {witness}")
            if len(report.failures) > MAX_WITNESSES:
                lines.append(f"  ... and {len(report.failures) - MAX_WITNESSES} more")
            all_passed = all_passed and report.passed

        if args.family_search:
            lines.extend(self._family_search_lines())

        lines.append("all checks passed" if all_passed else "FAILED")
        self.app.emit("\n".join(lines))
        return EXIT_OK if all_passed else EXIT_DOMAIN_ERROR

    def _family_search_lines(self):
        report = self.app.verifier.search_cycle_systems()
        logger.info(f"Family search explored {report.systems_explored} systems")
        lines = [
            f"family search: vertices<={report.max_vertices} cycles<={report.max_cycles} "
            f"systems={report.systems_explored} accepted={report.accepted} "
            f"counterexamples={len(report.counterexamples)}"
        ]
        lines.extend(f"  counterexample: {format_cycle_system(system)}" for system in report.counterexamples)
        return lines

    def cmd_config(self, args: argparse.Namespace) -> int:
        """Show the active configuration and any issues with it"""
        lines = [self.app.config.get_config_summary()]
        issues = self.app.config.validate_config()
        if issues:
            lines.append("Issues:")
            lines.extend(f"  - {issue}" for issue in issues)
        self.app.emit("\n".join(lines))
        return EXIT_OK


def setup(subparsers, common: argparse.ArgumentParser, app) -> None:
    commands = CheckCommands(app)

    enumerate_parser = subparsers.add_parser("enumerate", parents=[common], help="list Dyck words")
    enumerate_parser.add_argument("--exact", action="store_true", help="only semilength --max-n")
    enumerate_parser.set_defaults(handler=commands.cmd_enumerate)

    roundtrip = subparsers.add_parser("roundtrip-check", parents=[common], help="verify the bijection exhaustively")
    roundtrip.add_argument(
        "--family-search",
        action="store_true",
        help="also test E1/E2 against the matrix rules on small ordered cycle systems",
    )
    roundtrip.set_defaults(handler=commands.cmd_roundtrip_check)

    config = subparsers.add_parser("config", parents=[common], help="show configuration")
    config.set_defaults(handler=commands.cmd_config, uses_alphabet=False)

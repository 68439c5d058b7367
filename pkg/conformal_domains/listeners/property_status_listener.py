# Python Standard Libraries
import collections
import logging
import sys
import threading
# Third-Party Libraries
import click
# Custom Libraries
import conformal_domains.command_line_helpers as command_line_helpers
from conformal_domains.listeners.listener import Listener

logger = logging.getLogger(__name__)


class PropertyStatusListener(Listener):
    """Prints one line per property: glyph, check name and the worst residual
    next to its bound.
    """

    def __init__(self, stream=sys.stdout, max_report_messages=command_line_helpers.MAX_MESSAGES_DEFAULT):
        """
        :param stream The output to write to
        :param max_report_messages the maximum number of messages to return for a single check
        """
        self.lock = threading.Lock()
        self.stream = stream
        self.counts = collections.defaultdict(int)
        self.failures = []
        self.exit_status = 0
        self.max_messages = max_report_messages

    def on_start_validation(self, run_parameters):
        command_line_output = ("Verifying with seed {} trials {}"
                               ).format(run_parameters["seed"],
                                        run_parameters["trials"] or "default")
        click.echo(command_line_output, file=self.stream)

    def on_finish_check(self, check, reporter):
        """Returns None

        :param check (Check) The check object that was executed.
        :param reporter (Reporter) The reporter object that contains the results
            of the check that was executed.
        """
        with self.lock:
            result = reporter.state()
            glyph = click.style(command_line_helpers.glyphs[result],
                                **command_line_helpers.result_colors[result])

            self.counts[result] += 1
            if result == "failure":
                self.failures.append((check, reporter))
                self.exit_status += 1
            elif result == "error":
                self.exit_status += 1

            check_output = "[ {} ] - {} {}".format(glyph,
                                                   click.style(check.name, fg="cyan"),
                                                   command_line_helpers.format_residual(reporter))
            click.echo(check_output.rstrip(), file=self.stream)

    def on_finish_validation(self, verification_report):
        """Return None.

        Prints out the records of checks that did not pass with respect to
        their group, then the summary.
        """
        click.echo("\n", file=self.stream)
        command_line_helpers.print_result_records(verification_report,
                                                  max_messages=self.max_messages,
                                                  result_types=["warning", "error", "failure", "skipped"])
        click.echo("\n", file=self.stream)
        command_line_helpers.output_summary(verification_report.get_summary(),
                                            summary_header="Verification Summary",
                                            execution_time=verification_report.metrics["execution_time"])

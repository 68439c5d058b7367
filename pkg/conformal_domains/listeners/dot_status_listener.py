# Python Standard Libraries
import logging
import sys
import threading
# Third-Party Libraries
import click
# Custom Libraries
import conformal_domains.command_line_helpers as command_line_helpers
from conformal_domains.listeners.listener import Listener

logger = logging.getLogger(__name__)


class DotStatusListener(Listener):

    def __init__(self, stream=sys.stdout, column_wrap=80, max_report_messages=command_line_helpers.MAX_MESSAGES_DEFAULT):
        """
        :param stream The output to write to
        :param column_wrap the column wrap length
        :param max_report_messages the maximum number of messages to return for a single check
        """
        self.lock = threading.Lock()
        self.idx = 0
        self.column_wrap = column_wrap
        self.stream = stream
        self.exit_status = 0
        self.max_messages = max_report_messages

    def on_start_validation(self, run_parameters):
        click.echo("Verifying with seed {}".format(run_parameters["seed"]), file=self.stream)

    def on_finish_check(self, check, reporter):
        """Returns None

        :param check (Check) The check object that was executed.
        :param reporter (Reporter) The reporter object that contains the results
            of the check that was executed.
        """
        with self.lock:
            self.idx += 1
            result = reporter.state()
            glyph = "."
            if result == "failure":
                glyph = "F"
                self.exit_status += 1
            elif result == "error":
                glyph = "E"
                self.exit_status += 1
            elif result == "skipped":
                glyph = "S"
            self.stream.write(glyph)
            if self.idx % self.column_wrap == 0:
                self.stream.write("\n")
            self.stream.flush()

    def on_finish_validation(self, verification_report):
        """Returns None

        Prints out the output of failed checks with respect to their group.

        :param verification_report (VerificationReport) The report that
            contains the results of the run.
        """
        click.echo("\n", file=self.stream)
        command_line_helpers.print_result_records(verification_report,
                                                  max_messages=self.max_messages,
                                                  result_types=["error", "failure"])
        click.echo("\n", file=self.stream)
        command_line_helpers.output_summary(verification_report.get_summary(),
                                            summary_header="Verification Summary",
                                            execution_time=verification_report.metrics["execution_time"])

"""Terminal presentation of verification results."""

# Python Standard Libraries
import collections
import textwrap
# Third-Party Libraries
import click
import humanfriendly
# Custom Libraries
import conformal_domains.reporter

MAX_MESSAGES_DEFAULT = conformal_domains.reporter.MAX_MESSAGES_PER_CHECK
SUMMARY_RULE_WIDTH = 19

# click.style keyword arguments per result state
result_colors = collections.defaultdict(dict, {
    "error": {"fg": "white", "bg": "red"},
    "failure": {"fg": "red", "bg": "black"},
    "warning": {"fg": "black", "bg": "yellow"},
    "skipped": {"fg": "blue"},
    "success": {"fg": "green"},
})

glyphs = {status: " {} ".format("P" if status == "success" else status[0].upper())
          for status in conformal_domains.reporter.STATUS_TYPES}


def format_residual(reporter):
    """Returns "worst <residual> / bound <bound>" for a reporter that made
    assertions, or an empty string.
    """
    if reporter.worst_residual is None:
        return ""
    return "worst {:.3e} / bound {:.3e}".format(reporter.worst_residual, reporter.worst_bound)


def output_summary(summary, summary_header=None, execution_time=None):
    """Prints the count of checks per result state, their total and, when
    known, how long the run took.

    :param summary (Dict) result state to number of checks
    :param summary_header (String) replaces the default "Summary" title
    :param execution_time (Float) seconds the run took
    """
    click.echo("{}:\n".format(summary_header or "Summary"))

    for status in conformal_domains.reporter.STATUS_TYPES:
        line = "{:>14}: {:>2}".format(status, summary.get(status, 0))
        click.echo(click.style(line, **result_colors[status]))
    click.echo("-" * SUMMARY_RULE_WIDTH)
    click.echo("{:>14}: {:>2}".format("Total", sum(summary.values())))

    if execution_time is not None:
        click.echo("{:>14}: {}".format("Time", humanfriendly.format_timespan(execution_time)))
    click.echo()


def print_result_records(verification_report, max_messages=None, result_types=None):
    """Prints, per group, the checks whose state is one of result_types with
    their messages.

    :param verification_report (VerificationReport) a completed report
    :param max_messages (Int) messages printed per check
    :param result_types (List) the result states to print
    """
    if result_types is None:
        result_types = conformal_domains.reporter.STATUS_TYPES
    if max_messages is None:
        max_messages = MAX_MESSAGES_DEFAULT

    for grouping in verification_report.groups():
        selected = [(group, check, reporter)
                    for group, check, reporter in grouping
                    if reporter.state() in result_types]
        if not selected:
            continue

        click.secho(format_cli_string(selected[0][0].doc_name_human_readable(), left_padding=0), fg="green")
        for _, check, reporter in selected:
            click.echo(format_cli_string(check.doc_text(), left_padding=4))
            records = reporter.report_records(max_records=max_messages, status_types_to_return=result_types)
            for record in records:
                message = format_cli_string(record.message, left_padding=12).lstrip()
                click.secho("        {}: {}".format(record.result.upper(), message), **result_colors[record.result])


def format_cli_string(string_to_format, left_padding=4, column_wrap=80):
    """Returns the words of a string wrapped at column_wrap, every line
    indented by left_padding spaces. Words longer than a line are kept whole.
    """
    lines = textwrap.wrap(string_to_format,
                          width=column_wrap - left_padding,
                          break_long_words=False,
                          break_on_hyphens=False)
    return "\n".join(" " * left_padding + line for line in lines)

# Python Standard Libraries
import json
# Custom Libraries
import conformal_domains.command_line_helpers as command_line_helpers
import conformal_domains.version as version
from conformal_domains.formatters.numpy_encoder import NumpyEncoder
from conformal_domains.formatters.verification_report_formatter import VerificationReportFormatter


class VerificationReportJSONFormatter(VerificationReportFormatter):
    """Formats a VerificationReport as JSON.

    Wall-clock metrics are left out so that the same seed and trials always
    give the same document.
    """

    def format_run_parameters(self, verification_report):
        return {
            "run_parameters": verification_report.run_parameters,
        }

    def format_groups(self, verification_report, max_messages):
        groups = []
        for grouping in verification_report.groups():
            group_checks = []
            for group, check, reporter in grouping:
                report_records = [{"bound": report_record.bound,
                                   "message": report_record.message,
                                   "residual": report_record.residual,
                                   "result": report_record.result}
                                  for report_record
                                  in reporter.report_records(max_records=max_messages)]
                check_dict = {
                    "assertions": reporter.assertions,
                    "description": check.doc_text(),
                    "messages": report_records,
                    "name": check.name,
                    "result": reporter.state(),
                    "tags": list(check.tags),
                    "worst_bound": reporter.worst_bound,
                    "worst_residual": reporter.worst_residual,
                }
                group_checks.append(check_dict)
            group_dict = {
                "checks": group_checks,
                "description": group.doc_text(),
                "name": group.name,
            }
            groups.append(group_dict)

        return {
            "groups": groups,
        }

    def format_summary(self, verification_report):
        return {
            "summary": verification_report.get_summary(),
        }

    def format(self, verification_report, max_messages=None):
        if max_messages is None:
            max_messages = command_line_helpers.MAX_MESSAGES_DEFAULT

        report_dict = {
            "command": "verify",
            "status": verification_report.status,
            "passed": verification_report.passed,
            "version": version.__version__,
        }
        report_dict.update(self.format_run_parameters(verification_report))
        report_dict.update(self.format_groups(verification_report, max_messages))
        report_dict.update(self.format_summary(verification_report))

        return json.dumps(report_dict, cls=NumpyEncoder, sort_keys=True, indent=2)

"""The outcome of one `verify` run: a (group, check, reporter) triple per
executed property, the run parameters and the run status.
"""

# Python Standard Libraries
import copy
from datetime import datetime
import itertools
import logging
import operator
# Custom Libraries
import conformal_domains.reporter

logger = logging.getLogger(__name__)

NOT_EXECUTED = "not_executed"
IN_PROGRESS = "in_progress"
COMPLETED = "completed"
ERROR = "error"


class VerificationReport(object):

    def __init__(self, run_parameters=None):
        self.run_parameters = copy.copy(run_parameters) if run_parameters else {}
        self.status = NOT_EXECUTED
        self.errors = []
        self.metrics = dict.fromkeys(["start_time", "end_time", "execution_time"])
        self._results = []

    @property
    def results(self):
        return self._results

    @results.setter
    def results(self, new_results):
        self._results = list(new_results)

    def groups(self):
        """Returns the results split per group, groups in display order:

            [[(group, check, reporter), ...], [(group, check, reporter), ...]]
        """
        def group_key(result):
            return (result[0].report_display_order, result[0].name)

        ordered = sorted(self.results, key=group_key)
        return [list(members) for _, members in itertools.groupby(ordered, key=group_key)]

    def has_check(self, check_name):
        return any(check.name == check_name for _, check, _ in self.results)

    def get_summary(self):
        """Returns the number of checks in each result state."""
        summary = dict.fromkeys(conformal_domains.reporter.STATUS_TYPES, 0)
        for reporter in map(operator.itemgetter(2), self.results):
            summary[reporter.state()] += 1
        return summary

    @property
    def passed(self):
        """True for a completed run without failures and errors."""
        summary = self.get_summary()
        return self.status == COMPLETED and summary["failure"] == 0 and summary["error"] == 0

    def validation_start(self):
        self.metrics["start_time"] = datetime.now()
        if self.status != ERROR:
            self.status = IN_PROGRESS

    def validation_completed(self):
        self.metrics["end_time"] = datetime.now()
        elapsed = self.metrics["end_time"] - self.metrics["start_time"]
        self.metrics["execution_time"] = elapsed.total_seconds()
        if self.status != ERROR:
            self.status = COMPLETED

    def validation_error(self, exception):
        logger.debug("Verification run failed: {}".format(exception))
        self.status = ERROR
        self.errors.append(exception)

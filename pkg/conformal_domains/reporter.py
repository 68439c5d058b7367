"""Collects the outcome of one property check.

A check does not raise on a violated property. It records the residual and
the bound it was held to, so that a completed run can report the worst case
of every property next to its tolerance.
"""

# Python Standard Library
import collections
import logging
import time
import traceback
# Third-Party Libraries
import numpy as np

logger = logging.getLogger(__name__)

ReportRecord = collections.namedtuple("ReportRecord", ["result", "message", "residual", "bound"])
MAX_MESSAGES_PER_CHECK = 25
# Most severe first; a check's state is its most severe record
STATUS_TYPES = ["error", "failure", "warning", "skipped", "success"]
STATUS_PRIORITIES = {status: priority for priority, status in enumerate(STATUS_TYPES)}


def _ratio(residual, bound):
    if not np.isfinite(residual):
        return float("inf")
    if bound > 0.0:
        return residual / bound
    return 0.0 if residual == 0.0 else float("inf")


class Reporter(object):

    def __init__(self):
        self._records = []
        self.assertions = 0
        self.worst_ratio = None
        self.worst_residual = None
        self.worst_bound = None
        self.metrics = dict.fromkeys(["start_time", "end_time", "execution_time"])

    def _record(self, result, message, residual=None, bound=None):
        self._records.append(ReportRecord(result, message, residual, bound))

    def report_records(self, max_records=MAX_MESSAGES_PER_CHECK, status_types_to_return=STATUS_TYPES):
        """Returns the records of the requested states, most severe first.

        When more than max_records match, the last returned record is a
        warning counting the ones left out.
        """
        matching = sorted((record for record in self._records if record.result in status_types_to_return),
                          key=lambda record: STATUS_PRIORITIES[record.result])
        if len(matching) <= max_records:
            return matching

        kept, suppressed = matching[:max_records - 1], matching[max_records - 1:]
        counts = collections.Counter(record.result for record in suppressed)
        summary = ", ".join("{} {} messages".format(counts[status], status)
                            for status in STATUS_TYPES if status in counts)
        return kept + [ReportRecord("warning", "Suppressed " + summary, None, None)]

    def assert_within(self, residual, bound, message):
        """Records a failure when residual exceeds bound or is not finite, and
        keeps track of the worst residual relative to its bound.
        """
        residual, bound = float(residual), float(bound)
        self.assertions += 1
        ratio = _ratio(residual, bound)
        if self.worst_ratio is None or ratio > self.worst_ratio:
            self.worst_ratio, self.worst_residual, self.worst_bound = ratio, residual, bound
        if not (np.isfinite(residual) and residual <= bound):
            self._record("failure",
                         "{}: residual {:.3e} exceeds bound {:.3e}".format(message, residual, bound),
                         residual, bound)

    def fail(self, message):
        """The property does not hold."""
        self._record("failure", message)

    def assert_fail(self, assertion, message):
        if not assertion:
            self.fail(message)

    def warn(self, message):
        self._record("warning", message)

    def skip(self, message):
        logger.debug("Skipped: {}".format(message))
        self._record("skipped", message)

    def exception(self, exc_info, category="error"):
        """Records an exception raised by the check itself, with the location
        it was raised at. Check.run calls this; checks just raise.
        """
        _, value, trace = exc_info
        frames = traceback.extract_tb(trace)
        location = " ({}:{})".format(frames[-1].filename, frames[-1].lineno) if frames else ""
        self._record(category, "{}: {}{}".format(type(value).__name__, value, location))

    def start(self):
        self.metrics["start_time"] = time.time()

    def complete(self):
        if self.metrics["start_time"] is None:
            raise Exception("complete() called before start()")
        self.metrics["end_time"] = time.time()
        self.metrics["execution_time"] = self.metrics["end_time"] - self.metrics["start_time"]

    def state(self):
        """Returns the most severe state recorded, `success` when nothing
        was recorded.
        """
        if not self._records:
            return "success"
        return min((record.result for record in self._records), key=STATUS_PRIORITIES.get)

"""This is the core verification logic used to centralize the property suite
run-time.

This module contains functions to accumulate and run checks under
configurations as needed.
"""

# Python Standard Libraries
import concurrent.futures
import logging
# Custom Libraries
import conformal_domains.checks
import conformal_domains.version as version
from conformal_domains.validation_report import VerificationReport

logger = logging.getLogger(__name__)


class Validator(object):
    """The core verification class. Meant to encapsulate the entire property
    suite workflow.
    """

    def __init__(self, groups_to_validate=None, listeners=None, seed=None, trials=None, parallel=1):
        """
        Args:
            groups_to_validate (List of Group objects): Groups that contain the
                filtered checks to perform.
            listeners (List of Listener derived objects): Listeners that are
                used to hook into events of the workflow
            seed (Integer): the run seed every check sampler is derived from
            trials (Integer): overrides the per-check trial counts; None keeps
                the defaults
            parallel (Integer): the number of checks run concurrently

        Attributes:
            version (String): The version of conformal-domains being used
            verification_report (VerificationReport object): The report object
                containing the results
        """
        super(Validator, self).__init__()
        self.groups_to_validate = groups_to_validate
        self.listeners = listeners
        self.seed = conformal_domains.checks.DEFAULT_SEED if seed is None else int(seed)
        self.trials = trials
        self.parallel = max(1, int(parallel))

        if groups_to_validate is None:
            self.groups_to_validate = []
        if listeners is None:
            self.listeners = []

        self.version = version.__version__
        logger.info("Executing checks using conformal-domains version {}".format(self.version))
        self.run_parameters = {"seed": self.seed, "trials": self.trials}
        self.verification_report = VerificationReport(self.run_parameters)

    def __emit_event(self, eventname, *args):
        for listener in self.listeners:
            listener.handle_event(eventname, *args)

    def validate(self):
        """Runs every check of every group and stores the results in display
        order on the verification report.
        """
        self.verification_report = VerificationReport(self.run_parameters)
        self.verification_report.validation_start()
        self.__emit_event('start_validation', self.run_parameters)

        try:
            self.verification_report.results = self.__run_checks(self.groups_to_validate)
            self.verification_report.validation_completed()
        except Exception as exception:
            self.verification_report.validation_error(exception)
            raise
        finally:
            self.__emit_event('finish_validation', self.verification_report)

    def __execute_check(self, check):
        self.__emit_event('start_check', check)
        reporter = check.run(seed=self.seed, trials=self.trials)
        self.__emit_event('finish_check', check, reporter)
        return reporter

    def __run_checks(self, groups):
        """Returns a list of tuples containing a Group object, a Check object,
        and a Reporter object, in group then check display order.
        """
        futures = []
        with concurrent.futures.ThreadPoolExecutor(max_workers=self.parallel) as threadpool:
            logger.debug("Beginning verification with {} worker(s).".format(self.parallel))
            for group in groups:
                checks = list(group.checks())
                logger.debug(("Executing start_group event for"
                              " Group: {}"
                              " Group_Checks: {}"
                              " Listeners: {}"
                              ).format(group.name, checks, self.listeners))
                self.__emit_event('start_group', group, checks)
                futures.append((group, [(check, threadpool.submit(self.__execute_check, check))
                                        for check in checks]))
                self.__emit_event('finish_group', group, checks)

        # After exiting 'with', all checks are run.
        return [(group_object, check_object, future.result())
                for group_object, checks
                in futures
                for check_object, future
                in checks]


def verify(groups_to_validate=None, listeners=None, seed=None, trials=None, parallel=1):
    """Runs the property suite and returns its VerificationReport.

    Args:
        groups_to_validate (List of Group objects): defaults to every group of
            the built-in checks directory
        listeners (List of Listener derived objects): event listeners
        seed (Integer): run seed, DEFAULT_SEED when None
        trials (Integer): per-check trial override
        parallel (Integer): concurrent checks
    """
    if groups_to_validate is None:
        groups_to_validate = conformal_domains.checks.groups()
    validator = Validator(groups_to_validate, listeners, seed, trials, parallel)
    validator.validate()
    return validator.verification_report

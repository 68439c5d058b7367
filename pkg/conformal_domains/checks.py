"""Property suites are organised as groups of checks. A group is one module
`check_<name>.py` under conformal_domains/checks/, its docstring documents the
suite, and every `check_` function in it is one property.

`Check.run` executes a property against seeded random samples and returns the
Reporter that holds its residuals.
"""

# Python Standard Libraries
import importlib.util
import inspect
import logging
import operator
import os
import re
import sys
# Third-Party Libraries
import bs4
import markdown
# Custom Libraries
import conformal_domains.reporter
import conformal_domains.sampling

logger = logging.getLogger(__name__)

DEFAULT_CHECKS_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), "checks")
DEFAULT_SEED = conformal_domains.sampling.DEFAULT_SEED
DEFAULT_TRIALS = 1
DEFAULT_DISPLAY_ORDER = 1000
GROUP_FILE_PATTERN = re.compile(r"^check_.+\.py$", re.IGNORECASE)


class ResourceUnavailableException(Exception):
    """A check asked for an argument the runner does not provide."""
    pass


def markdown_to_text(text):
    """Renders Markdown and returns the text content of the HTML."""
    soup = bs4.BeautifulSoup(markdown.markdown(text), "lxml")
    return "".join(soup.find_all(string=True)).strip()


def _module_name(check_dir, file_path):
    relative_path, _ = os.path.splitext(os.path.relpath(file_path, check_dir))
    return relative_path.replace(os.sep, ".")


def import_group_modules(directory_paths):
    """Imports every group module found below the given directories.

    Returns:
        List of Python modules, in directory order and by file name within a
            directory.
    """
    modules = []
    for check_dir in directory_paths:
        logger.debug("Collecting groups from {}".format(check_dir))
        for root, _, file_names in os.walk(check_dir):
            for file_name in sorted(name for name in file_names if GROUP_FILE_PATTERN.match(name)):
                file_path = os.path.join(root, file_name)
                module_spec = importlib.util.spec_from_file_location(_module_name(check_dir, file_path), file_path)
                module = importlib.util.module_from_spec(module_spec)
                module_spec.loader.exec_module(module)
                modules.append(module)
    return modules


def generate_checks(module):
    """Returns a Check for every `check_` function of a module."""
    return [Check(name, function)
            for name, function in inspect.getmembers(module, inspect.isfunction)
            if name.startswith("check_")]


def generate_group(group_module, included_tags=None, excluded_tags=None):
    """Returns the Group of a module holding only the checks that pass the tag
    filter.

    Arguments:
        group_module (Python Module object): a group module
        included_tags (List of Strings): tags that select checks
        excluded_tags (List of Strings): tags that deselect checks
    """
    included_tags = list(included_tags or [])
    excluded_tags = list(excluded_tags or [])

    selected = [check
                for check in generate_checks(group_module)
                if check.matches_tags(included_tags, excluded_tags)]
    logger.debug("Group {}: {} check(s) selected with included tags [{}] and excluded tags [{}]".format(
        group_module.__name__, len(selected), ",".join(included_tags), ",".join(excluded_tags)))
    for check in selected:
        logger.debug("  {} tags={}".format(check.name, ",".join(check.tags)))

    return Group(group_module, checks=selected)


def groups(check_dirs=None, included_tags=None, excluded_tags=None):
    """Returns the Groups with at least one selected check, sorted by their
    report display order.

    :param check_dirs (List of strings) - directories holding group modules,
        the built-in checks directory when None
    """
    if check_dirs is None:
        check_dirs = [DEFAULT_CHECKS_DIR]

    non_empty = []
    for module in import_group_modules(check_dirs):
        group = generate_group(module, included_tags=included_tags, excluded_tags=excluded_tags)
        if group.check_count():
            non_empty.append(group)

    return sorted(non_empty, key=operator.attrgetter("report_display_order"))


class Group(object):
    """The checks of one group module. The module docstring is Markdown whose
    h3 heading names the suite.
    """

    def __init__(self, module, checks=None, report_display_order=None):
        self.name = module.__name__
        self.module = module
        self._checks = generate_checks(module) if checks is None else checks
        if report_display_order is None:
            report_display_order = getattr(module, "report_display_order", DEFAULT_DISPLAY_ORDER)
        self.report_display_order = report_display_order

    def doc_raw(self):
        return self.module.__doc__ or self.name

    def doc_text(self):
        return markdown_to_text(self.doc_raw())

    def doc_name_human_readable(self):
        """Returns the h3 heading of the docstring, or the module name."""
        heading = bs4.BeautifulSoup(markdown.markdown(self.doc_raw()), "lxml").h3
        if heading is None or not heading.contents:
            return self.name
        return str(heading.contents[0]).strip()

    def checks(self, included_tags=None, excluded_tags=None):
        """Yields the checks that pass the tag filter, ordered by display order
        then name.
        """
        ordered = sorted(self._checks, key=operator.attrgetter("report_display_order", "name"))
        for check in ordered:
            if check.matches_tags(included_tags or [], excluded_tags or []):
                yield check

    def check_count(self):
        return sum(1 for _ in self.checks())

    def tags(self):
        """Returns the distinct tags of the group's checks, first use first."""
        seen = []
        for check in self._checks:
            seen.extend(tag for tag in check.tags if tag not in seen)
        return seen


class Check(object):
    """One property: a `check_` function plus the metadata its decorators
    attached.
    """

    def __init__(self, name, fun):
        """
        Arguments:
            name (String): the check name, by default the function name
            fun (Function): the function executed by run
        """
        self.name = name
        self.fun = fun

    def __repr__(self):
        return "<conformal_domains.check:{}>".format(self.name)

    def doc_raw(self):
        return self.fun.__doc__ or self.name

    def doc_text(self):
        """Returns the docstring as plain text with runs of blanks collapsed."""
        return markdown_to_text(re.sub(r"([ \t])+", r"\1", self.doc_raw().strip()))

    @property
    def report_display_order(self):
        return getattr(self.fun, "report_display_order", DEFAULT_DISPLAY_ORDER)

    @property
    def tags(self):
        return getattr(self.fun, "tags", tuple())

    def trial_count(self, requested=None):
        """Returns how many samples the check draws.

        Without a request this is the check's default; a request is clamped
        to the check's cap.
        """
        if requested is None:
            return getattr(self.fun, "default_trials", DEFAULT_TRIALS)
        cap = getattr(self.fun, "max_trials", None)
        return int(requested) if cap is None else min(int(requested), cap)

    def matches_tags(self, included_tags, excluded_tags):
        """Applies the tag filter.

        A tag named in both lists counts as included. With included tags the
        check needs one of them; with excluded tags it must have none of them;
        with neither every check matches.
        """
        own = set(self.tags)
        included = set(included_tags)
        excluded = set(excluded_tags) - included

        if included and own.isdisjoint(included):
            return False
        return own.isdisjoint(excluded)

    def _arguments(self, reporter, seed, trials):
        providers = {
            "reporter": lambda: reporter,
            "sampler": lambda: conformal_domains.sampling.Sampler(
                conformal_domains.sampling.derive_seed(seed, self.name)),
            "trials": lambda: self.trial_count(trials),
        }
        arguments = []
        for parameter in inspect.signature(self.fun).parameters:
            if parameter not in providers:
                raise ResourceUnavailableException(
                    "{} was skipped: the argument '{}' cannot be provided, only {}.".format(
                        self.fun.__name__, parameter, ", ".join(sorted(providers))))
            arguments.append(providers[parameter]())
        return arguments

    def run(self, seed=DEFAULT_SEED, trials=None):
        """Runs the check and returns its completed Reporter.

        Arguments are matched on the parameter names of the check function:

          def check_something(reporter, sampler, trials)

        `sampler` is seeded from the run seed and the check name, so a check
        draws the same samples whatever the order checks are run in. Nothing
        the check raises escapes: NotImplementedError is a failure, a missing
        argument skips the check and anything else is an error.
        """
        reporter = conformal_domains.reporter.Reporter()
        reporter.start()
        try:
            logger.debug("Running {}".format(self.name))
            self.fun(*self._arguments(reporter, seed, trials))
        except NotImplementedError:
            reporter.exception(sys.exc_info(), "failure")
        except ResourceUnavailableException:
            reporter.exception(sys.exc_info(), "skipped")
        except Exception:
            logger.exception("Check {} raised".format(self.name))
            reporter.exception(sys.exc_info())
        reporter.complete()
        logger.debug("{} finished with {}".format(self.name, reporter.state()))
        return reporter

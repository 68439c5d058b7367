"""Decorators that attach runner metadata to `check_` functions. `Check`
reads the attributes back when it filters, orders and runs checks.
"""


def _attach(**attributes):
    def decorate(check):
        for name, value in attributes.items():
            setattr(check, name, value)
        return check
    return decorate


def tags(*names):
    """Tags the check for `--included-tags` / `--excluded-tags` selection."""
    return _attach(tags=names)


def display(report_display_order=1000):
    """Position of the check within its group's report."""
    return _attach(report_display_order=report_display_order)


def trials(default, cap=None):
    """Number of random samples the check draws. A `--trials` request is
    clamped to cap when one is given.
    """
    return _attach(default_trials=default, max_trials=cap)

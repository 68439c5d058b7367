# Python Standard Libraries
import textwrap
# Third-Party Libraries
import pytest

SAMPLE_GROUP = textwrap.dedent('''
    """
    ### Sample properties

    Properties used to exercise the runner.
    """

    from conformal_domains.decorators import display, tags, trials

    report_display_order = 5


    @tags("fast")
    @display(report_display_order=2)
    @trials(3, cap=5)
    def check_passes(reporter, sampler, trials):
        """Uniform samples stay below **one**."""
        for index in range(trials):
            reporter.assert_within(sampler.uniform(0.0, 1.0), 1.0, "sample {}".format(index))


    @tags("slow")
    @display(report_display_order=1)
    def check_fails(reporter):
        reporter.assert_within(2.0, 1.0, "too large")


    @tags("fast", "broken")
    def check_raises(reporter):
        raise RuntimeError("boom")


    def check_needs_unknown(reporter, fixture):
        pass


    def check_not_implemented(reporter):
        raise NotImplementedError


    def helper(reporter):
        pass
''')


@pytest.fixture
def sample_checks_dir(tmp_path):
    """A checks directory holding one group with a check of every outcome."""
    (tmp_path / "check_sample.py").write_text(SAMPLE_GROUP)
    (tmp_path / "not_a_group.py").write_text("def check_ignored(reporter):\n    pass\n")
    return str(tmp_path)

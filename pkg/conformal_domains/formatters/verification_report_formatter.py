class VerificationReportFormatter(object):

    def format(self, verification_report, max_messages=None):
        error_output = "Derived Formatter classes should override this"
        raise NotImplementedError(error_output)

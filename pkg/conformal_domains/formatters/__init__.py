from conformal_domains.formatters.numpy_encoder import NumpyEncoder
from conformal_domains.formatters.verification_report_formatter import VerificationReportFormatter
from conformal_domains.formatters.verification_report_json_formatter import VerificationReportJSONFormatter

# Python Standard Libraries
import sys
# Third-Party Libraries
# N/A
# Custom Libraries
# N/A

MINIMUM_PYTHON_VERSION = (3, 7)


def validate_python_version():
    major, minor = sys.version_info[:2]
    version_detected = "{}.{}".format(major, minor)

    if (major, minor) < MINIMUM_PYTHON_VERSION:
        error_output = ("Python version {} was detected."
                        " conformal-domains requires Python {}.{} or newer."
                        ).format(version_detected, *MINIMUM_PYTHON_VERSION)
        sys.exit(error_output)

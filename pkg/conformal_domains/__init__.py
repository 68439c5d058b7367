# Used for unlikely situation of conformal_domains in wrong python version
from conformal_domains import environment_validator
environment_validator.validate_python_version()

from conformal_domains import version
from conformal_domains import ambient
from conformal_domains import compactification
from conformal_domains import charts
from conformal_domains import geodesics
from conformal_domains import group_action
from conformal_domains import hyperboloids
from conformal_domains import sampling
from conformal_domains import figures
from conformal_domains import reporter
from conformal_domains import checks
from conformal_domains.decorators import *
from conformal_domains import validation_report
from conformal_domains import validator
from conformal_domains import formatters
from conformal_domains import listeners
from conformal_domains import command_line_helpers
from conformal_domains import main

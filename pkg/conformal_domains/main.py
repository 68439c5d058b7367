#!/usr/bin/env python

"""The main conformal-domains command line entry point."""

# Python Standard Libraries
import collections
import functools
import json
import logging
import sys
# Third-Party Libraries
import click
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.checks
import conformal_domains.command_line_helpers as command_line_helpers
import conformal_domains.compactification as compactification
import conformal_domains.figures as figures
import conformal_domains.formatters
import conformal_domains.geodesics as geodesics
import conformal_domains.group_action as group_action
import conformal_domains.hyperboloids as hyperboloids
import conformal_domains.listeners
import conformal_domains.validator
import conformal_domains.version as version
from conformal_domains.formatters import NumpyEncoder

# Commands
EMBED_COMMAND = "embed"
CHART_COMMAND = "chart"
TO_AMBIENT_COMMAND = "to-ambient"
TO_CHART_COMMAND = "to-chart"
METRIC_COMMAND = "metric"
CHRISTOFFEL_COMMAND = "christoffel"
GEODESIC_COMMAND = "geodesic"
FIGURE_COMMAND = "figure"
VERIFY_COMMAND = "verify"
LIST_COMMAND = "list"

# Exit codes
SUCCESS_EXIT_CODE = 0
VERIFICATION_FAILURE_EXIT_CODE = 1
USAGE_EXIT_CODE = 2
DOMAIN_INFINITY_EXIT_CODE = 3
NOT_ON_MANIFOLD_EXIT_CODE = 4
BAD_STEP_EXIT_CODE = 5
IO_EXIT_CODE = 6

# Library errors in order of precedence and the exit code each one maps to
EXIT_CODES = [
    (charts.AtDomainInfinityError, DOMAIN_INFINITY_EXIT_CODE),
    (charts.NotOnSigmaError, NOT_ON_MANIFOLD_EXIT_CODE),
    (compactification.NotOnConeError, NOT_ON_MANIFOLD_EXIT_CODE),
    (hyperboloids.WrongDomainError, NOT_ON_MANIFOLD_EXIT_CODE),
    (charts.StepTooLargeError, BAD_STEP_EXIT_CODE),
    (geodesics.InvalidStepError, BAD_STEP_EXIT_CODE),
    (OSError, IO_EXIT_CODE),
    (charts.InvalidLambdaError, USAGE_EXIT_CODE),
    (geodesics.ParamDomainError, USAGE_EXIT_CODE),
    (geodesics.TooFewSamplesError, USAGE_EXIT_CODE),
    (group_action.InvalidSpecError, USAGE_EXIT_CODE),
    (ambient.ApexError, USAGE_EXIT_CODE),
    (ValueError, USAGE_EXIT_CODE),
]

# `list` Command arguments and details
LIST_TYPE_ARGUMENT = "list-type"
CHECKS_LIST_TYPE = "checks"
GROUPS_LIST_TYPE = "groups"
TAGS_LIST_TYPE = "tags"
VERSION_LIST_TYPE = "version"

# Shared options and option details
DATA_FORMAT_OPTION = "--data-format"
JSON_DATA_FORMAT = "json"
CSV_DATA_FORMAT = "csv"
DATA_FORMAT_OPTION_HELP_OUTPUT = ("The format of the output written to"
                                  " standard output. [default: `{}`]")

DOMAIN_OPTION = "--domain"
DOMAIN_OPTION_HELP_OUTPUT = ("The domain of the chart point."
                             " [default: `{}`]").format(charts.SIGMA_MINUS)

X_OPTION = "--x"
X_OPTION_HELP_OUTPUT = "A Minkowski point, four comma separated reals x1,x2,x3,x4."

LAMBDA_OPTION = "--lambda"
LAMBDA_OPTION_HELP_OUTPUT = "The chart coordinate lambda, a positive real."

SIDE_OPTION = "--side"
SIDE_OPTION_HELP_OUTPUT = ("The chart side: 1 for X5 - X6 > 0, -1 for"
                           " X5 - X6 < 0. [default: `1`]")

NUMERICAL_OPTION = "--numerical"
NUMERICAL_OPTION_HELP_OUTPUT = ("Also compute the value by central differences"
                                " and report the largest deviation from the"
                                " closed form.")

STEP_OPTION = "--h"

LOG_LEVEL_OPTION = "--log-level"
LOG_LEVELS = [logging.getLevelName(level) for level in (logging.NOTSET, logging.DEBUG, logging.INFO,
                                                          logging.WARNING, logging.ERROR, logging.CRITICAL)]
CRITICAL_LOG_LEVEL = logging.getLevelName(logging.CRITICAL)
LOG_LEVEL_OPTION_HELP_OUTPUT = ("Threshold of the log records written. [default: `{}`]"
                                ).format(CRITICAL_LOG_LEVEL)

LOG_FILE_OPTION = "--log-file"
LOG_FILE_OPTION_HELP_OUTPUT = ("Append log records to this file instead of"
                               " standard error.")

# `embed` Options
MAP_OPTION = "--map"
TAU_PLUS_MAP = "tau-plus"
TAU_MINUS_MAP = "tau-minus"
MAP_OPTION_HELP_OUTPUT = ("The null cone embedding: tau-plus lands on"
                          " X5 - X6 = 1, tau-minus on X5 - X6 = -1."
                          " [default: `{}`]").format(TAU_PLUS_MAP)

# `chart to-chart` Options
AMBIENT_OPTION = "--X"
AMBIENT_OPTION_HELP_OUTPUT = "An ambient vector, six comma separated reals X1,...,X6."

# `geodesic` Options
PARAM_OPTION = "--param"
PARAM_OPTION_HELP_OUTPUT = ("The parameterization: `affine` integrates the"
                            " affine equations in s, `lambda` integrates"
                            " x'' = x'(1 + k x'^2)/lambda in lambda."
                            " [default: `{}`]").format(geodesics.AFFINE)
START_OPTION = "--start"
START_OPTION_HELP_OUTPUT = "The Minkowski part x of the start point. [default: `0,0,0,0`]"
VELOCITY_OPTION = "--vel"
VELOCITY_OPTION_HELP_OUTPUT = ("The initial velocity: five components"
                               " (dx/ds, dlambda/ds) for `affine`, four"
                               " components dx/dlambda for `lambda`.")
SMAX_OPTION = "--smax"
SMAX_OPTION_HELP_OUTPUT = "The affine parameter range [0, smax]. [default: `10`]"
LAMBDA_END_OPTION = "--lambda-end"
LAMBDA_END_OPTION_HELP_OUTPUT = "The final lambda of a `lambda` integration."
LAMBDA_FLOOR_OPTION = "--lambda-floor"
LAMBDA_FLOOR_OPTION_HELP_OUTPUT = ("Affine integration stops before lambda"
                                   " reaches this floor. [default: `{}`]"
                                   ).format(geodesics.DEFAULT_LAMBDA_FLOOR)
CHECK_OPTION = "--check"
CHECK_OPTION_HELP_OUTPUT = ("Append conservation and plane-section"
                            " diagnostics to the output.")

# `figure` Options
FIGURE_NUMBER_OPTION = "--n"
FIGURE_NUMBER_OPTION_HELP_OUTPUT = ("1: null geodesics in the (x1 = x4, lambda)"
                                    " plane, 2: semicircles in the (x1, lambda)"
                                    " plane, 3: hyperbolas in the (x4, lambda)"
                                    " plane.")
OUT_OPTION = "--out"
OUT_OPTION_HELP_OUTPUT = "The SVG file to write."
VALUES_OPTION = "--values"
VALUES_OPTION_HELP_OUTPUT = ("Comma separated family parameters: a for"
                             " Figure 1, x0 for Figures 2 and 3.")
SAMPLES_OPTION = "--samples"
SAMPLES_OPTION_HELP_OUTPUT = ("Samples per curve. [default: `{}`]"
                              ).format(figures.DEFAULT_SAMPLES)
X_RANGE_OPTION = "--x-range"
X_RANGE_OPTION_HELP_OUTPUT = "The horizontal plot range, two comma separated reals."
LAMBDA_RANGE_OPTION = "--lambda-range"
LAMBDA_RANGE_OPTION_HELP_OUTPUT = "The lambda plot range, two comma separated reals."

PARALLEL_OPTION = "--parallel"
PARALLEL_OPTION_HELP_OUTPUT = ("Number of family members or checks processed"
                               " concurrently. Output order does not depend on"
                               " it. [default: `1`]")

# `verify` Options
SEED_OPTION = "--seed"
SEED_OPTION_HELP_OUTPUT = ("The seed every property's random samples are"
                           " derived from. [default: `{}`]"
                           ).format(conformal_domains.checks.DEFAULT_SEED)
TRIALS_OPTION = "--trials"
TRIALS_OPTION_HELP_OUTPUT = ("Overrides the number of random samples of every"
                             " property, capped per property.")

MODE_OPTION = "--mode"
DOTS_MODE = "dots"
VERBOSE_MODE = "verbose"
MODE_OPTION_HELP_OUTPUT = ("`{}` prints one character per property, `{}` one"
                           " line per property with its worst residual and"
                           " bound. [default: `{}`]").format(DOTS_MODE, VERBOSE_MODE, VERBOSE_MODE)

INCLUDED_TAGS_OPTION = "--included-tags"
INCLUDED_TAGS_OPTION_HELP_OUTPUT = ("Run only the properties carrying this tag. Repeat"
                                    " the option for several tags; `conformal-domains"
                                    " {} {}` shows them all.").format(LIST_COMMAND, TAGS_LIST_TYPE)

EXCLUDED_TAGS_OPTION = "--excluded-tags"
EXCLUDED_TAGS_OPTION_HELP_OUTPUT = ("Skip the properties carrying this tag. Repeat the"
                                    " option for several tags. A tag given to both"
                                    " options counts as included.")

OUTPUT_FILE_OPTION = "--output-file"
OUTPUT_FILE_OPTION_HELP_OUTPUT = "Also write the JSON report of the run to this file."

MAX_MESSAGES_OPTION = "--max-messages"
MAX_MESSAGES_DEFAULT = command_line_helpers.MAX_MESSAGES_DEFAULT
MAX_MESSAGES_OPTION_HELP_OUTPUT = ("The number of messages reported per"
                                   " property. [default: `{}`]").format(MAX_MESSAGES_DEFAULT)

# Valid values for arguments and options
VALID_VALUES = {
    LIST_TYPE_ARGUMENT: [
        CHECKS_LIST_TYPE,
        GROUPS_LIST_TYPE,
        TAGS_LIST_TYPE,
        VERSION_LIST_TYPE
    ],
    DOMAIN_OPTION: charts.DOMAINS,
    MAP_OPTION: [
        TAU_PLUS_MAP,
        TAU_MINUS_MAP
    ],
    SIDE_OPTION: ["1", "-1"],
    PARAM_OPTION: geodesics.PARAMETERIZATIONS,
    FIGURE_NUMBER_OPTION: [str(number) for number in figures.FIGURE_NUMBERS],
    MODE_OPTION: [
        DOTS_MODE,
        VERBOSE_MODE
    ],
    DATA_FORMAT_OPTION: [
        JSON_DATA_FORMAT,
        CSV_DATA_FORMAT
    ],
    LOG_LEVEL_OPTION: LOG_LEVELS,
}

CSV_HEADER = "param,x1,x2,x3,x4,lambda"

# Meta Vars
STRING_META_VAR = "<STRING>"
VECTOR_META_VAR = "<REAL,...>"
REAL_META_VAR = "<REAL>"

EMBEDDINGS = {
    TAU_PLUS_MAP: compactification.tau_plus,
    TAU_MINUS_MAP: compactification.tau_minus,
}

INFINITY_CLASSIFICATIONS = {
    charts.SIGMA_MINUS: "two-sheeted hyperboloid",
    charts.SIGMA_PLUS: "one-sheeted hyperboloid",
}

logger = logging.getLogger(__name__)


# A custom type for validation as per https://github.com/pallets/click/blob/master/docs/parameters.rst
class VectorParamType(click.ParamType):
    """Comma separated reals in decimal or scientific notation, with an
    optional required count.
    """
    name = 'vector'

    def __init__(self, size=None):
        self.size = size

    def convert(self, value, param, ctx):
        if isinstance(value, np.ndarray):
            return value
        try:
            vector = np.array([float(component) for component in str(value).split(",")])
        except ValueError:
            self.fail('"{}" is not a comma separated list of reals.'.format(value), param, ctx)
        if self.size is not None and len(vector) != self.size:
            self.fail('"{}" has {} components, expected {}.'.format(value, len(vector), self.size), param, ctx)
        if not np.all(np.isfinite(vector)):
            self.fail('"{}" has components that are not finite.'.format(value), param, ctx)
        return vector


def logging_options(command):
    """Adds the shared --log-level and --log-file options to a command."""
    command = click.option(LOG_FILE_OPTION, default=None, metavar=STRING_META_VAR,
                           help=LOG_FILE_OPTION_HELP_OUTPUT)(command)
    command = click.option(LOG_LEVEL_OPTION, type=click.Choice(VALID_VALUES[LOG_LEVEL_OPTION]),
                           default=CRITICAL_LOG_LEVEL, help=LOG_LEVEL_OPTION_HELP_OUTPUT)(command)
    return command


def exit_on_library_errors(command):
    """Configures logging from the shared options, then maps library errors
    raised by the command onto the exit-code contract with a diagnostic on
    standard error.
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        root_logger = logging.getLogger()
        configure_logger(root_logger, kwargs.pop("log_level"), kwargs.pop("log_file"))
        try:
            return command(*args, **kwargs)
        except tuple(error for error, _ in EXIT_CODES) as exception:
            exit_code = next(code for error, code in EXIT_CODES if isinstance(exception, error))
            root_logger.debug("Exiting with {}".format(exit_code), exc_info=1)
            click.echo("Error: {}".format(exception), err=True)
            sys.exit(exit_code)
    return wrapper


def _clean(value):
    """Converts numpy values to JSON types and -0.0 to 0.0."""
    if isinstance(value, np.ndarray):
        return [_clean(item) for item in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_clean(item) for item in value]
    if isinstance(value, dict):
        return {key: _clean(item) for key, item in value.items()}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) + 0.0
    return value


def emit_json(command, inputs, result, diagnostics=None):
    document = {
        "command": command,
        "inputs": _clean(inputs),
        "result": _clean(result),
        "diagnostics": _clean(diagnostics if diagnostics is not None else {}),
    }
    click.echo(json.dumps(document, cls=NumpyEncoder, sort_keys=True, indent=2))


def format_number(value):
    """Returns a real with 17 significant digits, -0.0 written as 0."""
    return "{:.17g}".format(float(value) + 0.0)


def emit_csv(path, diagnostics):
    lines = [CSV_HEADER]
    for parameter, row in zip(path.parameters, path.coordinates):
        lines.append(",".join(format_number(value) for value in np.append(parameter, row)))
    for name in sorted(diagnostics):
        lines.append("# {}={}".format(name, format_number(diagnostics[name])))
    lines.append("# termination={}".format(path.termination))
    click.echo("\n".join(lines))


@click.group()
def conversion_cli():
    """This is the command line utility to convert points between Minkowski
    space, the null cone of R^{4,2} and the half-space charts.
    """
    pass


@click.group()
def geometry_cli():
    """This is the command line utility for the metric, Christoffel symbols
    and geodesics of the domains.
    """
    pass


@click.group()
def artifact_cli():
    """This is the command line utility to render the geodesic families."""
    pass


@click.group()
def report_cli():
    """This is the command line utility used to list information about the
    property suites.
    """
    pass


@click.group()
def validation_cli():
    """This is the command line utility to run the property suites."""
    pass


@conversion_cli.command(EMBED_COMMAND, short_help="Embed a Minkowski point into the null cone")
@click.option(X_OPTION, "x", type=VectorParamType(4), required=True, metavar=VECTOR_META_VAR,
              help=X_OPTION_HELP_OUTPUT)
@click.option(MAP_OPTION, "embedding", type=click.Choice(VALID_VALUES[MAP_OPTION]), default=TAU_PLUS_MAP,
              help=MAP_OPTION_HELP_OUTPUT)
@logging_options
@exit_on_library_errors
def embed(x, embedding):
    """Prints tau+(x) or tau-(x), a vector of the null cone of R^{4,2}."""
    X = EMBEDDINGS[embedding](x)
    emit_json(EMBED_COMMAND,
              {"x": x, "map": embedding},
              {"X": X},
              {"Q": ambient.quadratic_form(X), "section": X[4] - X[5]})


@conversion_cli.group(CHART_COMMAND, short_help="Convert between ambient vectors and chart points")
def chart():
    """Converts between ambient vectors of Sigma+- and half-space chart
    coordinates (x, lambda).
    """
    pass


@chart.command(TO_AMBIENT_COMMAND, short_help="Chart point to ambient vector")
@click.option(DOMAIN_OPTION, "domain", type=click.Choice(VALID_VALUES[DOMAIN_OPTION]), default=charts.SIGMA_MINUS,
              help=DOMAIN_OPTION_HELP_OUTPUT)
@click.option(X_OPTION, "x", type=VectorParamType(4), required=True, metavar=VECTOR_META_VAR,
              help=X_OPTION_HELP_OUTPUT)
@click.option(LAMBDA_OPTION, "lam", type=float, required=True, metavar=REAL_META_VAR,
              help=LAMBDA_OPTION_HELP_OUTPUT)
@click.option(SIDE_OPTION, "side", type=click.Choice(VALID_VALUES[SIDE_OPTION]), default="1",
              help=SIDE_OPTION_HELP_OUTPUT)
@logging_options
@exit_on_library_errors
def to_ambient(domain, x, lam, side):
    """Prints the ambient vector of the chart point (x, lambda)."""
    p = charts.ChartPoint(domain, x, lam, int(side))
    X = charts.chart_to_ambient(p)
    emit_json("{} {}".format(CHART_COMMAND, TO_AMBIENT_COMMAND),
              {"domain": domain, "x": x, "lambda": lam, "side": p.side},
              {"X": X},
              {"Q": ambient.quadratic_form(X)})


@chart.command(TO_CHART_COMMAND, short_help="Ambient vector to chart point")
@click.option(AMBIENT_OPTION, "ambient_vector", type=VectorParamType(6), required=True, metavar=VECTOR_META_VAR,
              help=AMBIENT_OPTION_HELP_OUTPUT)
@logging_options
@exit_on_library_errors
def to_chart(ambient_vector):
    """Prints the domain, chart coordinates and side of an ambient vector of
    Sigma+-. Points with X5 = X6 exit with 3 after printing where they lie at
    infinity.
    """
    command = "{} {}".format(CHART_COMMAND, TO_CHART_COMMAND)
    inputs = {"X": ambient_vector}
    try:
        p = charts.ambient_to_chart(ambient_vector)
    except charts.AtDomainInfinityError as exception:
        emit_json(command, inputs,
                  {"at_infinity": True,
                   "domain": exception.domain,
                   "reduced_point": exception.point,
                   "q": exception.q,
                   "classification": INFINITY_CLASSIFICATIONS[exception.domain]})
        raise
    emit_json(command, inputs,
              {"at_infinity": False, "domain": p.domain, "x": p.x, "lambda": p.lam, "side": p.side})


@geometry_cli.command(METRIC_COMMAND, short_help="Print the induced metric")
@click.option(DOMAIN_OPTION, "domain", type=click.Choice(VALID_VALUES[DOMAIN_OPTION]), default=charts.SIGMA_MINUS,
              help=DOMAIN_OPTION_HELP_OUTPUT)
@click.option(X_OPTION, "x", type=VectorParamType(4), default="0,0,0,0", metavar=VECTOR_META_VAR,
              help=X_OPTION_HELP_OUTPUT)
@click.option(LAMBDA_OPTION, "lam", type=float, required=True, metavar=REAL_META_VAR,
              help=LAMBDA_OPTION_HELP_OUTPUT)
@click.option(NUMERICAL_OPTION, is_flag=True, default=False, help=NUMERICAL_OPTION_HELP_OUTPUT)
@click.option(STEP_OPTION, "h", type=float, default=None, metavar=REAL_META_VAR,
              help="The central difference step. [default: 1e-5 max(1, |coordinate|)]")
@logging_options
@exit_on_library_errors
def metric(domain, x, lam, numerical, h):
    """Prints the 5x5 metric (1/lambda^2) diag(1, 1, 1, -1, +-1) in the
    coordinate order (x1, x2, x3, x4, lambda).
    """
    p = charts.ChartPoint(domain, x, lam)
    closed_form = charts.metric_closed_form(p)
    diagnostics = {"signature": charts.metric_signature(closed_form)}
    if numerical:
        numerical_metric = charts.metric_numerical(p, h)
        diagnostics["max_deviation"] = float(np.max(np.abs(numerical_metric - closed_form)))
    emit_json(METRIC_COMMAND,
              {"domain": domain, "x": x, "lambda": lam, "numerical": numerical, "h": h},
              {"metric": closed_form},
              diagnostics)


@geometry_cli.command(CHRISTOFFEL_COMMAND, short_help="Print the nonzero Christoffel symbols")
@click.option(DOMAIN_OPTION, "domain", type=click.Choice(VALID_VALUES[DOMAIN_OPTION]), default=charts.SIGMA_MINUS,
              help=DOMAIN_OPTION_HELP_OUTPUT)
@click.option(X_OPTION, "x", type=VectorParamType(4), default="0,0,0,0", metavar=VECTOR_META_VAR,
              help=X_OPTION_HELP_OUTPUT)
@click.option(LAMBDA_OPTION, "lam", type=float, required=True, metavar=REAL_META_VAR,
              help=LAMBDA_OPTION_HELP_OUTPUT)
@click.option(NUMERICAL_OPTION, is_flag=True, default=False, help=NUMERICAL_OPTION_HELP_OUTPUT)
@click.option(STEP_OPTION, "h", type=float, default=geodesics.DEFAULT_CHRISTOFFEL_STEP, metavar=REAL_META_VAR,
              help="The central difference step. [default: `{}`]".format(geodesics.DEFAULT_CHRISTOFFEL_STEP))
@logging_options
@exit_on_library_errors
def christoffel(domain, x, lam, numerical, h):
    """Lists the nonzero Christoffel symbols Gamma^a_bc with 1-based indices,
    index 5 being lambda.
    """
    p = charts.ChartPoint(domain, x, lam)
    gamma = geodesics.christoffel_closed_form(p)
    symbols = [{"symbol": "Gamma^{}_{}{}".format(a + 1, b + 1, c + 1),
                "index": [a + 1, b + 1, c + 1],
                "value": gamma[a, b, c]}
               for a, b, c in zip(*np.nonzero(gamma))]
    diagnostics = {}
    if numerical:
        diagnostics["max_deviation"] = float(np.max(np.abs(geodesics.christoffel_numerical(p, h) - gamma)))
    emit_json(CHRISTOFFEL_COMMAND,
              {"domain": domain, "x": x, "lambda": lam, "numerical": numerical, "h": h},
              {"symbols": symbols},
              diagnostics)


def _geodesic_diagnostics(path):
    diagnostics = {}
    if len(path) >= 3:
        diagnostics["plane_section_residual"] = geodesics.plane_section_residual(path)
    if path.parameterization == geodesics.AFFINE:
        diagnostics["speed_drift"] = geodesics.speed_drift(path)
        try:
            diagnostics["reparameterization_residual"] = geodesics.reparameterization_residual(path)
        except geodesics.ParamDomainError:
            logger.debug("dlambda/ds vanishes along the path, no chain-rule diagnostic")
    else:
        diagnostics["direction_drift"] = geodesics.direction_drift(path)
    return diagnostics


@geometry_cli.command(GEODESIC_COMMAND, short_help="Integrate a geodesic")
@click.option(PARAM_OPTION, "parameterization", type=click.Choice(VALID_VALUES[PARAM_OPTION]),
              default=geodesics.AFFINE, help=PARAM_OPTION_HELP_OUTPUT)
@click.option(DOMAIN_OPTION, "domain", type=click.Choice(VALID_VALUES[DOMAIN_OPTION]), default=charts.SIGMA_MINUS,
              help=DOMAIN_OPTION_HELP_OUTPUT)
@click.option(START_OPTION, "start", type=VectorParamType(4), default="0,0,0,0", metavar=VECTOR_META_VAR,
              help=START_OPTION_HELP_OUTPUT)
@click.option(LAMBDA_OPTION, "lam", type=float, required=True, metavar=REAL_META_VAR,
              help=LAMBDA_OPTION_HELP_OUTPUT)
@click.option(SIDE_OPTION, "side", type=click.Choice(VALID_VALUES[SIDE_OPTION]), default="1",
              help=SIDE_OPTION_HELP_OUTPUT)
@click.option(VELOCITY_OPTION, "velocity", type=VectorParamType(), required=True, metavar=VECTOR_META_VAR,
              help=VELOCITY_OPTION_HELP_OUTPUT)
@click.option(SMAX_OPTION, "s_max", type=float, default=10.0, metavar=REAL_META_VAR, help=SMAX_OPTION_HELP_OUTPUT)
@click.option(LAMBDA_END_OPTION, "lambda_end", type=float, default=None, metavar=REAL_META_VAR,
              help=LAMBDA_END_OPTION_HELP_OUTPUT)
@click.option(STEP_OPTION, "h", type=float, default=geodesics.DEFAULT_STEP, metavar=REAL_META_VAR,
              help="The RK4 step. [default: `{}`]".format(geodesics.DEFAULT_STEP))
@click.option(LAMBDA_FLOOR_OPTION, "lambda_floor", type=float, default=geodesics.DEFAULT_LAMBDA_FLOOR,
              metavar=REAL_META_VAR, help=LAMBDA_FLOOR_OPTION_HELP_OUTPUT)
@click.option(CHECK_OPTION, is_flag=True, default=False, help=CHECK_OPTION_HELP_OUTPUT)
@click.option(DATA_FORMAT_OPTION, type=click.Choice(VALID_VALUES[DATA_FORMAT_OPTION]), default=CSV_DATA_FORMAT,
              help=DATA_FORMAT_OPTION_HELP_OUTPUT.format(CSV_DATA_FORMAT))
@logging_options
@exit_on_library_errors
def geodesic(parameterization, domain, start, lam, side, velocity, s_max, lambda_end, h, lambda_floor, check,
             data_format):
    """Integrates a geodesic with fixed-step RK4 and prints the sampled path
    with the reason integration stopped.
    """
    side = int(side)
    if parameterization == geodesics.AFFINE:
        if len(velocity) != 5:
            raise click.BadParameter("an affine velocity has 5 components, got {}".format(len(velocity)),
                                     param_hint=VELOCITY_OPTION)
        initial = geodesics.GeodesicState(charts.ChartPoint(domain, start, lam, side), velocity)
        path = geodesics.integrate_affine(initial, s_max, h, lambda_floor)
    else:
        if len(velocity) != 4:
            raise click.BadParameter("a lambda-parameterized velocity has 4 components, got {}".format(len(velocity)),
                                     param_hint=VELOCITY_OPTION)
        if lambda_end is None:
            raise click.UsageError("{} needs {}".format(geodesics.LAMBDA, LAMBDA_END_OPTION))
        charts.ChartPoint(domain, start, lam, side)
        path = geodesics.integrate_lambda(start, velocity, lam, lambda_end, h, domain, side)

    diagnostics = _geodesic_diagnostics(path) if check else {}
    if data_format == CSV_DATA_FORMAT:
        emit_csv(path, diagnostics)
        return
    emit_json(GEODESIC_COMMAND,
              {"param": parameterization, "domain": domain, "start": start, "lambda": lam, "side": side,
               "vel": velocity, "smax": s_max, "lambda_end": lambda_end, "h": h, "lambda_floor": lambda_floor},
              {"parameterization": path.parameterization,
               "termination": path.termination,
               "samples": [{"param": parameter, "x": row[:4], "lambda": row[4]}
                           for parameter, row in zip(path.parameters, path.coordinates)]},
              diagnostics)


def figure_command_line(spec):
    """Returns the canonical command line that regenerates a figure."""
    return ("conformal-domains {} {} {} {} {} {} {} {} {},{} {} {},{}"
            ).format(FIGURE_COMMAND,
                     FIGURE_NUMBER_OPTION, spec.number,
                     VALUES_OPTION, ",".join(format_number(value) for value in spec.values),
                     SAMPLES_OPTION, spec.samples,
                     X_RANGE_OPTION, format_number(spec.x_range[0]), format_number(spec.x_range[1]),
                     LAMBDA_RANGE_OPTION, format_number(spec.lam_range[0]), format_number(spec.lam_range[1]))


@artifact_cli.command(FIGURE_COMMAND, short_help="Render a family of geodesics through (0, 1) as SVG")
@click.option(FIGURE_NUMBER_OPTION, "number", type=click.Choice(VALID_VALUES[FIGURE_NUMBER_OPTION]), required=True,
              help=FIGURE_NUMBER_OPTION_HELP_OUTPUT)
@click.option(OUT_OPTION, "out", type=click.Path(dir_okay=False), required=True, metavar=STRING_META_VAR,
              help=OUT_OPTION_HELP_OUTPUT)
@click.option(VALUES_OPTION, "values", type=VectorParamType(), default=None, metavar=VECTOR_META_VAR,
              help=VALUES_OPTION_HELP_OUTPUT)
@click.option(SAMPLES_OPTION, "samples", type=int, default=None, help=SAMPLES_OPTION_HELP_OUTPUT)
@click.option(X_RANGE_OPTION, "x_range", type=VectorParamType(2), default=None, metavar=VECTOR_META_VAR,
              help=X_RANGE_OPTION_HELP_OUTPUT)
@click.option(LAMBDA_RANGE_OPTION, "lam_range", type=VectorParamType(2), default=None, metavar=VECTOR_META_VAR,
              help=LAMBDA_RANGE_OPTION_HELP_OUTPUT)
@click.option(PARALLEL_OPTION, "parallel", type=click.IntRange(min=1), default=1, help=PARALLEL_OPTION_HELP_OUTPUT)
@logging_options
@exit_on_library_errors
def figure(number, out, values, samples, x_range, lam_range, parallel):
    """Writes the SVG of a family of Sigma- geodesics through the chart point
    (0, 1). Every curve is checked to pass within 1e-9 of (0, 1) and to keep
    its algebraic invariant before anything is written.
    """
    spec = figures.figure_spec(int(number), values, samples, x_range, lam_range)
    curves = figures.figure_curves(spec, parallel)
    svg = figures.render_svg(spec, curves, figure_command_line(spec))
    with open(out, "w", encoding="utf-8", newline="\n") as file:
        file.write(svg)
    emit_json(FIGURE_COMMAND,
              {"n": spec.number, "values": spec.values, "samples": spec.samples,
               "x_range": spec.x_range, "lambda_range": spec.lam_range},
              {"out": out, "members": len(curves)},
              {"passage_distance": max(figures.passage_distance(curve.geodesic) for curve in curves)})


@report_cli.command(LIST_COMMAND, short_help="List the property suites")
@click.argument(LIST_TYPE_ARGUMENT, nargs=-1, required=True)
@click.option(INCLUDED_TAGS_OPTION, default=None, multiple=True, metavar=STRING_META_VAR,
              help=INCLUDED_TAGS_OPTION_HELP_OUTPUT)
@click.option(EXCLUDED_TAGS_OPTION, default=None, multiple=True, metavar=STRING_META_VAR,
              help=EXCLUDED_TAGS_OPTION_HELP_OUTPUT)
def report(list_type, included_tags, excluded_tags):
    """
    Prints what the property suites hold.

    \b
    LIST_TYPE is one or more of:
    [checks | groups | tags | version]
    """
    unknown = sorted(set(list_type) - set(VALID_VALUES[LIST_TYPE_ARGUMENT]))
    if unknown:
        raise click.BadParameter("unexpected list-type: {}".format(", ".join(unknown)),
                                 param_hint=LIST_TYPE_ARGUMENT)
    wanted = set(list_type)
    rule = "=" * 80

    def section(title):
        click.echo("\n{0}\n{1}\n{0}".format(rule, title))

    def describe(check):
        label = functools.partial(click.style, fg="cyan")
        description = command_line_helpers.format_cli_string(check.doc_text(), left_padding=22).lstrip()
        click.echo("    - {} {}".format(label("Name:"), check.name))
        click.echo("        - {} {}".format(label("Description:"), description))
        click.echo("        - {} {}\n\n".format(label("Tags:"), ", ".join(check.tags)))

    suites = conformal_domains.checks.groups(included_tags=included_tags, excluded_tags=excluded_tags)

    if VERSION_LIST_TYPE in wanted:
        click.echo("conformal-domains version {}".format(version.__version__))

    if wanted & {CHECKS_LIST_TYPE, GROUPS_LIST_TYPE}:
        section("Property Suites")
        for suite in suites:
            if GROUPS_LIST_TYPE in wanted:
                click.echo("{} ({})".format(click.style(suite.doc_name_human_readable(), fg="yellow"),
                                            click.style(suite.name, fg="green")))
            if CHECKS_LIST_TYPE in wanted:
                for check in suite.checks():
                    describe(check)

    if GROUPS_LIST_TYPE in wanted:
        section("Group Metrics")
        click.echo("Groups Count: {:>2}".format(len(suites)))
    if CHECKS_LIST_TYPE in wanted:
        section("Check Metrics")
        click.echo("Checks Count: {}".format(sum(suite.check_count() for suite in suites)))

    if TAGS_LIST_TYPE in wanted:
        section("All Tags")
        tag_counts = collections.Counter(tag
                                         for suite in suites
                                         for check in suite.checks()
                                         for tag in check.tags)
        width = max(map(len, tag_counts), default=0)
        for tag in sorted(tag_counts):
            click.echo("{}\t{}".format(tag.ljust(width), tag_counts[tag]))
        click.echo("\n")


@validation_cli.command(VERIFY_COMMAND, short_help="Run the property suites")
@click.option(SEED_OPTION, "seed", type=int, default=conformal_domains.checks.DEFAULT_SEED,
              help=SEED_OPTION_HELP_OUTPUT)
@click.option(TRIALS_OPTION, "trials", type=click.IntRange(min=1), default=None, help=TRIALS_OPTION_HELP_OUTPUT)
@click.option(PARALLEL_OPTION, "parallel", type=click.IntRange(min=1), default=1, help=PARALLEL_OPTION_HELP_OUTPUT)
@click.option(MODE_OPTION, type=click.Choice(VALID_VALUES[MODE_OPTION]), default=VERBOSE_MODE,
              help=MODE_OPTION_HELP_OUTPUT)
@click.option(INCLUDED_TAGS_OPTION, default=None, multiple=True, metavar=STRING_META_VAR,
              help=INCLUDED_TAGS_OPTION_HELP_OUTPUT)
@click.option(EXCLUDED_TAGS_OPTION, default=None, multiple=True, metavar=STRING_META_VAR,
              help=EXCLUDED_TAGS_OPTION_HELP_OUTPUT)
@click.option(OUTPUT_FILE_OPTION, type=click.Path(dir_okay=False), metavar=STRING_META_VAR,
              help=OUTPUT_FILE_OPTION_HELP_OUTPUT)
@click.option(MAX_MESSAGES_OPTION, type=click.IntRange(min=1), default=MAX_MESSAGES_DEFAULT,
              help=MAX_MESSAGES_OPTION_HELP_OUTPUT)
@logging_options
@exit_on_library_errors
def verify(seed, trials, parallel, mode, included_tags, excluded_tags, output_file, max_messages):
    """
    Verify runs the property suite of every module with seeded random
    samples and prints each property with its worst residual. The exit code
    is 0 when every property holds and 1 otherwise.
    """
    root_logger = logging.getLogger()

    if mode == DOTS_MODE:
        listener = conformal_domains.listeners.DotStatusListener(max_report_messages=max_messages)
    else:
        listener = conformal_domains.listeners.PropertyStatusListener(max_report_messages=max_messages)

    groups_to_validate = conformal_domains.checks.groups(included_tags=included_tags,
                                                         excluded_tags=excluded_tags)

    root_logger.info(("Beginning execution of conformal-domains version: {}"
                      ).format(version.__version__))
    verification_report = None
    try:
        verification_report = conformal_domains.validator.verify(groups_to_validate,
                                                                 listeners=[listener],
                                                                 seed=seed,
                                                                 trials=trials,
                                                                 parallel=parallel)
    except Exception:
        root_logger.critical("An unexpected error occurred during the run-time of conformal-domains", exc_info=1)
        sys.exit(VERIFICATION_FAILURE_EXIT_CODE)

    if output_file is not None:
        formatter = conformal_domains.formatters.VerificationReportJSONFormatter()
        with open(output_file, "w", encoding="utf-8", newline="\n") as file:
            file.write(formatter.format(verification_report, max_messages))

    sys.exit(SUCCESS_EXIT_CODE if verification_report.passed else VERIFICATION_FAILURE_EXIT_CODE)


LOG_RECORD_FORMAT = " ".join('{}="%({})s"'.format(key, attribute) for key, attribute in [
    ("LEVEL", "levelname"),
    ("TIME", "asctime"),
    ("NAME", "name"),
    ("FILENAME", "filename"),
    ("MODULE", "module"),
    ("MESSAGE", "message"),
])


def configure_logger(logger, log_level, log_file):
    """Sends the records of logger at log_level and above to log_file, or to
    standard error without one.
    """
    if log_file is None:
        handler = logging.StreamHandler(stream=sys.stderr)
    else:
        handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
    handler.setFormatter(logging.Formatter(fmt=LOG_RECORD_FORMAT))

    logger.handlers = [handler]
    logger.setLevel(log_level)


def execute():
    """An execution wrapper function."""
    command_line_interface = click.CommandCollection(sources=[conversion_cli,
                                                              geometry_cli,
                                                              artifact_cli,
                                                              report_cli,
                                                              validation_cli])
    command_line_interface()
    logging.shutdown()  # Used to clean up the logging bits on finish


if __name__ == "__main__":
    execute()

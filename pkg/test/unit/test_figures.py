# Third-Party Libraries
import numpy as np
import pytest
from lxml import etree
# Custom Libraries
import conformal_domains.figures as figures
import conformal_domains.geodesics as geodesics

SVG_NAMESPACE = {"svg": "http://www.w3.org/2000/svg"}
COMMAND_LINE = "conformal-domains figure --n 2"


@pytest.mark.parametrize("number", figures.FIGURE_NUMBERS)
def test_default_families_pass_through_the_base_point(number):
    spec = figures.figure_spec(number)
    curves = figures.figure_curves(spec)
    assert [curve.value for curve in curves] == spec.values
    for curve in curves:
        assert figures.passage_distance(curve.geodesic) <= figures.PASSAGE_TOLERANCE
        assert len(curve.points) == spec.samples


def test_default_sweeps():
    assert len(figures.figure_spec(1).values) == 11
    assert len(figures.figure_spec(2).values) == 11
    assert all(abs(value) >= 1.0 for value in figures.figure_spec(3).values)


def test_family_members_have_the_right_kind():
    assert figures.family_member(1, 0.5).kind == geodesics.NULL_PARABOLA
    assert figures.family_member(2, 0.5).kind == geodesics.SPACELIKE_SEMICIRCLE
    assert figures.family_member(3, 2.0).kind == geodesics.TIMELIKE_HYPERBOLA


def test_semicircle_family_by_hand():
    semicircle = figures.family_member(2, 2.0)
    np.testing.assert_array_equal(semicircle.center, [2.0, 0.0, 0.0, 0.0])
    assert semicircle.a == pytest.approx(np.sqrt(5.0))


@pytest.mark.parametrize("kwargs", [
    {"number": 4},
    {"number": 1, "values": []},
    {"number": 1, "values": [float("nan")]},
    {"number": 1, "samples": 1},
    {"number": 2, "x_range": (1.0, 1.0)},
    {"number": 2, "lam_range": (-1.0, 1.0)},
])
def test_figure_spec_validation(kwargs):
    with pytest.raises(ValueError):
        figures.figure_spec(**kwargs)


def test_figure_three_needs_unit_distance():
    with pytest.raises(ValueError):
        figures.figure_curves(figures.figure_spec(3, values=[0.5]))


def test_parallel_build_keeps_the_order():
    spec = figures.figure_spec(2, samples=21)
    sequential = figures.figure_curves(spec, parallel=1)
    concurrent = figures.figure_curves(spec, parallel=4)
    assert [curve.value for curve in concurrent] == [curve.value for curve in sequential]
    for first, second in zip(sequential, concurrent):
        np.testing.assert_array_equal(first.points, second.points)


@pytest.mark.parametrize("number", figures.FIGURE_NUMBERS)
def test_render_svg(number):
    spec = figures.figure_spec(number, samples=51)
    curves = figures.figure_curves(spec)
    svg = figures.render_svg(spec, curves, COMMAND_LINE)
    document = etree.fromstring(svg.encode("utf-8"))
    assert len(document.findall(".//svg:polyline", SVG_NAMESPACE)) == len(spec.values)
    assert document.find("svg:metadata", SVG_NAMESPACE).text == COMMAND_LINE
    comments = [comment.text for comment in document.iterchildren(etree.Comment)]
    assert comments == [" command: {} ".format(figures.comment_text(COMMAND_LINE))]
    assert document.get("viewBox") == "0 0 {} {}".format(figures.WIDTH, figures.HEIGHT)
    assert svg == figures.render_svg(spec, figures.figure_curves(spec), COMMAND_LINE)


@pytest.mark.parametrize("text, expected", [
    ("conformal-domains figure --n 2", "conformal-domains figure - -n 2"),
    ("a---b", "a- - -b"),
    ("trailing-", "trailing- "),
    ("plain", "plain"),
])
def test_comment_text(text, expected):
    assert figures.comment_text(text) == expected
    assert "--" not in figures.comment_text(text)


def test_command_line_comment_keeps_the_svg_well_formed():
    spec = figures.figure_spec(1, samples=11)
    command_line = "conformal-domains figure --n 1 --samples 11 --out figure-1.svg"
    svg = figures.render_svg(spec, figures.figure_curves(spec), command_line)
    document = etree.fromstring(svg.encode("utf-8"))
    assert document.find("svg:metadata", SVG_NAMESPACE).text == command_line
    comment = next(document.iterchildren(etree.Comment))
    assert comment.text == " command: {} ".format(figures.comment_text(command_line))

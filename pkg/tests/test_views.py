# -*- coding: utf-8 -*-
#
# taildep -- Extremal dependence of random scale constructions
# Copyright (C) 2026 the taildep developers.
#
# This file is part of taildep.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
# For information on the complete list of contributors to the
# taildep library, see: AUTHORS.rst
#

"""Tests different views of catalog templates in YAML files."""

from contextlib import ExitStack as does_not_raise
from pathlib import Path

import pytest

from taildep import views
from taildep.exceptions import InvalidSpec
from taildep.validation import families_template
from taildep.yaml_utils import read_yaml_file

types = {
    "beta": {"shp1": "float", "shp2": "float"},
    "weibull": {"shp": "float", "scl": "float", "rate": "float"},
    "grid": {
        "levels": "List[float]",
        "method": "str",
        "threads": "int",
        "strict": "bool",
    },
}

defaults = {
    "beta": {"shp1": None, "shp2": "user['beta']['shp1']"},
    "weibull": {
        "shp": None,
        "scl": 1.0,
        "rate": "user['weibull']['scl'] ** (-user['weibull']['shp'])",
    },
    "grid": {
        "levels": [0.9, 0.99],
        "method": "quadrature",
        "threads": 1,
        "strict": False,
    },
}

docstrings = {
    "beta": {
        "shp1": "First shape.",
        "shp2": "Second shape, equal to the first unless given.",
    },
    "weibull": {
        "shp": "Shape.",
        "scl": "Scale.",
        "rate": "Rate of the exponential tail in the power of x.",
    },
    "grid": {
        "levels": "Levels q.",
        "method": "How chi(q) is evaluated.",
        "threads": "Worker threads.",
        "strict": "Fail on undecided coefficients.",
    },
}

predicates = {
    "beta": {
        "shp1": ["value > 0"],
        "shp2": ["value > 0", "value <= 10 * user['beta']['shp1']"],
    },
    "weibull": {"shp": ["value > 0"], "scl": ["value > 0"], "rate": None},
    "grid": {
        "levels": ["len(value) > 0"],
        "method": ["value in ['quadrature', 'monte_carlo']"],
        "threads": ["value >= 1"],
        "strict": None,
    },
}


@pytest.fixture
def template():
    this_path = Path(__file__).parent
    template_file = this_path / "validation" / "overall" / "template.yml"
    return read_yaml_file(template_file)


testdata = [
    (views.view_by_type, types, does_not_raise()),
    (views.view_by_default, defaults, does_not_raise()),
    (views.view_by_docstring, docstrings, does_not_raise()),
    (views.view_by_predicates, predicates, does_not_raise()),
    (lambda x: views.view_by("foobar", x), {}, pytest.raises(ValueError)),
]


@pytest.mark.parametrize(
    "viewer,reference,raises",
    testdata,
    ids=["types", "defaults", "docstrings", "predicates", "invalid"],
)
def test_view_by(template, viewer, reference, raises):
    with raises:
        view = viewer(template)
        assert view == reference


def test_view_by_default_keywords(template):
    keywords = template["sections"][1]["keywords"]
    assert views.view_by_default_keywords(keywords) == defaults["weibull"]


def test_missing_docstring_placeholder():
    template = {"keywords": [{"name": "shp", "type": "float", "docstring": " "}]}
    assert views.view_by_docstring(template) == {"shp": InvalidSpec}


def test_catalog_views():
    families = families_template()
    assert views.view_by_type(families)["exponential"] == {
        "scl": "float",
        "rate": "float",
    }
    assert views.view_by_docstring(families)["exponential"]["rate"] == (
        "Rate, the reciprocal of the scale."
    )

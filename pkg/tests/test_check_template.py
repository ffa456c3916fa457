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

"""Tests that catalog templates are not malformed."""

from contextlib import ExitStack as does_not_raise
from copy import deepcopy

import pytest

from taildep.check_template import is_template_valid
from taildep.exceptions import InvalidSpec

# Well formed keyword and section
keyword = {"name": "shp", "type": "float", "docstring": "Shape."}
section = {"name": "weibull", "docstring": "Weibull law.", "keywords": [keyword]}

valid = {
    "sections": [
        {
            "name": "gamma",
            "docstring": "Gamma law.",
            "keywords": [
                {"name": "shp", "type": "float", "default": 1, "docstring": "Shape."},
                {
                    "name": "rate",
                    "type": "float",
                    "default": "1.0 / user['gamma']['scl']",
                    "docstring": "Rate.",
                },
                {"name": "scl", "type": "float", "default": 1.0, "docstring": "Scale."},
            ],
        }
    ],
}

# Malformed keywords
keyword_with_section = deepcopy(keyword)
keyword_with_section["sections"] = [deepcopy(section)]

keyword_with_invalid_type = deepcopy(keyword)
keyword_with_invalid_type["type"] = "complex"

keyword_without_type = deepcopy(keyword)
keyword_without_type.pop("type")

keyword_without_docstring = deepcopy(keyword)
keyword_without_docstring.pop("docstring")

keyword_with_nothing = deepcopy(keyword_without_type)
keyword_with_nothing.pop("docstring")

keyword_with_wrong_default = deepcopy(keyword)
keyword_with_wrong_default["default"] = [1.0, 2.0]

keyword_with_infinite_default = deepcopy(keyword)
keyword_with_infinite_default["default"] = float("inf")

# Malformed sections
section_without_docstring = deepcopy(section)
section_without_docstring.pop("docstring")

cycles = {
    "sections": [
        {
            "name": "loop",
            "docstring": "Section docs",
            "keywords": [
                {
                    "name": "a",
                    "type": "float",
                    "default": "user['loop']['c']",
                    "docstring": "Defaults to c.",
                },
                {
                    "name": "b",
                    "type": "float",
                    "default": "user['loop']['a']",
                    "docstring": "Defaults to a.",
                },
                {
                    "name": "c",
                    "type": "float",
                    "default": "user['loop']['b']",
                    "docstring": "Defaults to b.",
                },
            ],
        }
    ],
}


error_preamble = r"Error(?:s)? occurred when checking the template:\n"
check_template_data = [
    (valid, does_not_raise()),
    (
        {"keywords": [keyword_with_section]},
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['shp'\]:\s+Sections cannot be nested under keywords."
            ),
        ),
    ),
    (
        {"keywords": [keyword_with_invalid_type]},
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['shp'\]:\s+Keywords must have a valid type."
            ),
        ),
    ),
    (
        {"keywords": [keyword_without_type]},
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['shp'\]:\s+Keywords must have a valid type."
            ),
        ),
    ),
    (
        {"keywords": [keyword_without_docstring]},
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['shp'\]:\s+Keywords must have a non-empty docstring."
            ),
        ),
    ),
    (
        {"keywords": [keyword_with_nothing]},
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['shp'\]:\s+Keywords must have a valid type.\n"
                r"- At user\['shp'\]:\s+Keywords must have a non-empty docstring."
            ),
        ),
    ),
    (
        {"keywords": [keyword_with_wrong_default]},
        pytest.raises(
            InvalidSpec,
            match=r"Default \[1.0, 2.0\] does not match type float.",
        ),
    ),
    (
        {"keywords": [keyword_with_infinite_default]},
        pytest.raises(InvalidSpec, match=r"Default inf does not match type float."),
    ),
    (
        {"sections": [section_without_docstring]},
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['weibull'\]:\s+Sections must have a non-empty docstring."
            ),
        ),
    ),
    (
        cycles,
        pytest.raises(
            InvalidSpec,
            match=(
                error_preamble
                + r"- At user\['loop'\]\['(a|b|c)'\]:\s+Keyword depends cyclically on keyword user\['loop'\]\['(a|b|c)'\]"  # noqa: E501
            ),
        ),
    ),
]


@pytest.mark.parametrize(
    "template,raises",
    check_template_data,
    ids=[
        "valid",
        "keyword_with_section",
        "keyword_with_invalid_type",
        "keyword_without_type",
        "keyword_without_docstring",
        "keyword_with_nothing",
        "keyword_with_wrong_default",
        "keyword_with_infinite_default",
        "section_without_docstring",
        "cycles",
    ],
)
def test_check_template(template, raises):
    with raises:
        is_template_valid(template)


def test_reorder_template():
    ordered = is_template_valid(valid)
    names = [k["name"] for k in ordered["sections"][0]["keywords"]]
    assert names.index("scl") < names.index("rate")
    assert sorted(names) == ["rate", "scl", "shp"]
    # the input is left untouched
    assert [k["name"] for k in valid["sections"][0]["keywords"]] == [
        "shp",
        "rate",
        "scl",
    ]

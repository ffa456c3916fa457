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

"""Tests for validation of parameter maps against catalog templates."""

import re
from contextlib import ExitStack as does_not_raise
from typing import List

import pytest
from read_in import read_in

from taildep.check_template import is_template_valid
from taildep.exceptions import InvalidParams, NotANorm, TaildepError, UnknownFamily
from taildep.validation import (
    catalog_names,
    catalog_section,
    families_template,
    norms_template,
    presets_template,
    validate_from_dicts,
    validate_params,
)


def valid():
    return {
        "beta": {"shp1": 2.0, "shp2": 2.0},
        "weibull": {"shp": 2.0, "scl": 3.0, "rate": 3.0 ** -2.0},
        "grid": {
            "levels": [0.9, 0.99, 0.999],
            "method": "quadrature",
            "threads": 4,
            "strict": False,
        },
    }


template_errors_data = [
    (
        "template_errors",
        "input.yml",
        "template_no_documentation.yml",
        TaildepError,
        None,
        [
            r"- At user\['beta'\]:\s+Sections must have a non-empty docstring\.\n"
            r"- At user\['beta'\]\['shp1'\]:\s+Keywords must have a non-empty docstring\."  # noqa: E501
        ],
    ),
    (
        "template_errors",
        "input.yml",
        "template_empty_documentation.yml",
        TaildepError,
        None,
        [
            r"- At user\['beta'\]:\s+Sections must have a non-empty docstring\.\n"
            r"- At user\['beta'\]\['shp1'\]:\s+Keywords must have a non-empty docstring\."  # noqa: E501
        ],
    ),
    (
        "template_errors",
        "input.yml",
        "template_untyped.yml",
        TaildepError,
        None,
        [r"- At user\['beta'\]\['shp1'\]:\s+Keywords must have a valid type\."],
    ),
    (
        "template_errors",
        "input.yml",
        "template_bad_default.yml",
        TaildepError,
        None,
        [r"- At user\['beta'\]\['shp1'\]:\s+Default 'one' does not match type float\."],
    ),
    (
        "template_errors",
        "input.yml",
        "template_nested.yml",
        TaildepError,
        None,
        [r"- At user\['beta'\]\['shp1'\]:\s+Sections cannot be nested under keywords"],  # noqa: E501
    ),
    (
        "template_errors",
        "input.yml",
        "template_invalid_predicate.yml",
        TaildepError,
        None,
        [
            r"- At user\['beta'\]\['shp1'\]:\s+NameError name 'undefined' is not defined in closure '0 < value <= undefined'\."  # noqa: E501
        ],
    ),
    (
        "template_errors",
        "input.yml",
        "template_w_cycles.yml",
        TaildepError,
        None,
        [
            r"Error(?:s)? occurred when checking the template:\s+- At user\['beta'\]\['shp(1|2)'\]:\s+Keyword depends cyclically on keyword user\['beta'\]\['shp(1|2)'\]"  # noqa: E501
        ],
    ),
]

input_errors_data = [
    (
        "input_errors",
        "unexpected_parameter.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when merging:\n- At user\['beta'\]:\s+Found unexpected parameter: 'shp3'"  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "unexpected_section.yml",
        "template.yml",
        InvalidParams,
        None,
        [r"Error(?:s)? occurred when merging:\n- Found unexpected section: 'gamma'"],
    ),
    (
        "input_errors",
        "missing_parameter.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when merging:\n- At user\['beta'\]\['shp1'\]:\s+Parameter 'shp1' is required but has no value\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "expected_section.yml",
        "template.yml",
        InvalidParams,
        None,
        [r"- At user\['beta'\]:\s+Expected a section for 'beta'\."],
    ),
    (
        "input_errors",
        "type_error_bool.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when fixing defaults:\n- At user\['grid'\]\['strict'\]:\s+Actual \(int\) and declared \(bool\) types do not match\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "type_error_float.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when fixing defaults:\n- At user\['beta'\]\['shp1'\]:\s+Actual \(bool\) and declared \(float\) types do not match\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "type_error_int.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when fixing defaults:\n- At user\['grid'\]\['threads'\]:\s+Actual \(float\) and declared \(int\) types do not match\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "type_error_list.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when fixing defaults:\n- At user\['grid'\]\['levels'\]:\s+Actual \(List\[float, str\]\) and declared \(List\[float\]\) types do not match\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "type_error_str.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when fixing defaults:\n- At user\['grid'\]\['method'\]:\s+Actual \(int\) and declared \(str\) types do not match\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "predicate_intra.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when checking predicates:\n- At user\['weibull'\]\['shp'\]:\s+Predicate 'value > 0' not satisfied\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "predicate_cross.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"Error(?:s)? occurred when checking predicates:\n- At user\['beta'\]\['shp2'\]:\s+Predicate 'value <= 10 \* user\['beta'\]\['shp1'\]' not satisfied\."  # noqa: E501
        ],
    ),
    (
        "input_errors",
        "predicate_choice.yml",
        "template.yml",
        InvalidParams,
        None,
        [
            r"- At user\['grid'\]\['method'\]:\s+"
            + re.escape("Predicate 'value in ['quadrature', 'monte_carlo']'")
        ],
    ),
]

validation_data = (
    [
        ("overall", "input.yml", "template.yml", None, valid(), [""]),
        (
            "overall",
            "input_ordering.yml",
            "ordering.yml",
            None,
            {"chain": {"a": 2.5, "b": 5.0, "c": 6.0}},
            [""],
        ),
        (
            "overall",
            None,
            "ordering.yml",
            None,
            {"chain": {"a": 1.0, "b": 2.0, "c": 3.0}},
            [""],
        ),
    ]
    + template_errors_data
    + input_errors_data
)


def ids(terms: List[str]) -> str:
    return "-".join([t.rsplit(".", 1)[0] if t is not None else "" for t in terms])


@pytest.mark.parametrize(
    "folder,input_file_name,template_file_name,raises,valid,error_message",
    [
        pytest.param(f, i, t, r, v, e, id=ids([f, i, t]))
        for f, i, t, r, v, e in validation_data
    ],
)
def test_validation(
    folder, input_file_name, template_file_name, raises, valid, error_message
):
    user, template = read_in(folder, input_file_name, template_file_name)

    if raises is None:
        ctx = does_not_raise()
    else:
        ctx = pytest.raises(raises, match="|".join(error_message))

    with ctx:
        template = is_template_valid(template)
        user = validate_from_dicts(user=user, template=template)
        assert user == valid


def test_shipped_catalogs_are_valid():
    assert "exponential" in catalog_names(families_template())
    assert catalog_names(norms_template()) == [
        "lp",
        "linf",
        "theta_mix",
        "mahalanobis",
        "custom",
    ]
    assert catalog_names(presets_template()) == ["model1", "model2", "gaussian_factor"]


def test_catalog_section():
    restricted = catalog_section(norms_template(), "linf")
    assert catalog_names(restricted) == ["linf"]
    with pytest.raises(UnknownFamily, match="Known: lp, linf"):
        catalog_section(norms_template(), "hexagon")
    with pytest.raises(NotANorm):
        catalog_section(norms_template(), "hexagon", missing=NotANorm)


def test_validate_params_defaults():
    families = families_template()
    assert validate_params("exponential", {"scl": 4.0}, template=families) == {
        "scl": 4.0,
        "rate": 0.25,
    }
    assert validate_params("exponential", {}, template=families)["rate"] == 1.0
    assert validate_params("normal", {"loc": 1}, template=families) == {
        "loc": 1.0,
        "scl": 1.0,
    }


@pytest.mark.parametrize(
    "family,params,match",
    [
        ("exponential", {"scl": -1.0}, r"Predicate 'value > 0' not satisfied"),
        ("exponential", {"shape": 1.0}, r"Found unexpected parameter: 'shape'"),
        ("normal", {"scl": "wide"}, r"Actual \(str\) and declared \(float\)"),
    ],
    ids=["predicate", "unexpected", "type"],
)
def test_validate_params_rejects(family, params, match):
    with pytest.raises(InvalidParams, match=match):
        validate_params(family, params, template=families_template())


def test_validate_params_collates_errors():
    with pytest.raises(InvalidParams) as excinfo:
        validate_params(
            "exponential", {"scl": -1.0, "rate": -2.0}, template=families_template()
        )
    assert "Errors occurred when checking predicates" in str(excinfo.value)
    assert str(excinfo.value).count("not satisfied") == 2

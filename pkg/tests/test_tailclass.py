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

"""Tests for tail classes, their conversions and the family catalog."""

import math

import pytest
from custom_strategies import tail_classes
from hypothesis import given

from taildep.exceptions import (
    InvalidParams,
    InvalidSpec,
    MappingUndefined,
    UnknownFamily,
)
from taildep.tailclass import (
    MDA,
    ConvEquiv,
    ExpTailed,
    GumbelGeneric,
    LogWeibullType,
    NegWeibull,
    Ordering,
    RegVarInf,
    SuperHeavy,
    WeibullType,
    as_exp_tailed,
    as_reg_var,
    catalog_families,
    classify_parametric,
    dominates,
    from_json,
    log_hazard_index,
    log_transform,
    mda,
    primary_class,
)
from taildep.validation import catalog_names, families_template


def test_catalog_matches_template():
    assert catalog_families() == tuple(catalog_names(families_template()))


@pytest.mark.parametrize(
    "family,params,expected",
    [
        ("pareto", {"shp": 3.0}, RegVarInf(3.0)),
        ("uniform", {}, NegWeibull(1.0, 1.0, 1.0)),
        ("exponential", {"rate": 2.0}, WeibullType(2.0, 1.0, 0.0, 1.0)),
        (
            "normal",
            {},
            WeibullType(0.5, 2.0, -1.0, 1.0 / math.sqrt(2.0 * math.pi)),
        ),
        (
            "lognormal",
            {},
            LogWeibullType(0.5, 2.0, -1.0, 1.0 / math.sqrt(2.0 * math.pi)),
        ),
        ("gompertz", {}, GumbelGeneric(math.inf, math.inf)),
        ("genpareto", {"shp": -0.5}, NegWeibull(2.0, 2.0, 0.25)),
        ("weibull", {"shp": 0.5}, WeibullType(1.0, 0.5, 0.0, 1.0)),
    ],
    ids=[
        "pareto",
        "uniform",
        "exponential",
        "normal",
        "lognormal",
        "gompertz",
        "genpareto_bounded",
        "weibull_heavy",
    ],
)
def test_primary_class(family, params, expected):
    classes = classify_parametric(family, params)
    c = primary_class(classes)
    assert type(c) is type(expected)
    for name, value in expected.to_json().items():
        got = c.to_json()[name]
        if isinstance(value, float):
            assert got == pytest.approx(value)
        else:
            assert got == value


def test_memberships_of_exponential():
    classes = classify_parametric("exponential", {"scl": 0.5})
    assert ExpTailed(2.0) in classes
    assert WeibullType(2.0, 1.0, 0.0, 1.0) in classes


def test_lognormal_is_subexponential():
    assert ConvEquiv(0.0) in classify_parametric("lognormal", {"scl": 2.0})


def test_point_mass_has_no_class():
    assert classify_parametric("degenerate", {"value": 2.0}) == ()
    assert primary_class(()) is None


def test_unknown_family():
    with pytest.raises(UnknownFamily, match="cauchy_like"):
        classify_parametric("cauchy_like", {})


@pytest.mark.parametrize(
    "family,params",
    [
        ("pareto", {"shp": -1.0}),
        ("exponential", {"rate": 0.0}),
        ("uniform", {"scl": "wide"}),
        ("beta", {"shp1": 2.0, "shape": 1.0}),
    ],
    ids=["negative_index", "zero_rate", "wrong_type", "unknown_parameter"],
)
def test_invalid_params(family, params):
    with pytest.raises(InvalidParams):
        classify_parametric(family, params)


@pytest.mark.parametrize(
    "build",
    [
        lambda: RegVarInf(-1.0),
        lambda: ExpTailed(0.0),
        lambda: WeibullType(1.0, 0.0),
        lambda: NegWeibull(math.inf, 1.0),
        lambda: NegWeibull(1.0, 1.0, ell_limit=-2.0),
        lambda: GumbelGeneric(log_hazard_index=0.0),
    ],
    ids=["rv", "et", "wt", "endpoint", "ell", "gumbel"],
)
def test_parameter_ranges(build):
    with pytest.raises(InvalidParams):
        build()


@pytest.mark.parametrize(
    "c,expected",
    [
        (RegVarInf(2.0), MDA.FRECHET),
        (RegVarInf(0.0, 1.0), MDA.NONE),
        (LogWeibullType(1.0, 1.0), MDA.FRECHET),
        (LogWeibullType(1.0, 2.0), MDA.GUMBEL),
        (LogWeibullType(1.0, 0.5), MDA.NONE),
        (WeibullType(1.0, 2.0), MDA.GUMBEL),
        (ExpTailed(1.0), MDA.GUMBEL),
        (NegWeibull(1.0, 2.0), MDA.NEGATIVE_WEIBULL),
        (ConvEquiv(0.0), None),
        (SuperHeavy(ExpTailed(1.0)), MDA.NONE),
    ],
    ids=[
        "rv",
        "slowly_varying",
        "lwt_power",
        "lwt_light",
        "lwt_superheavy",
        "wt",
        "et",
        "negweibull",
        "subexponential",
        "superheavy",
    ],
)
def test_mda(c, expected):
    assert mda(c) is expected


def test_log_hazard_index():
    assert log_hazard_index(WeibullType(1.0, 2.0)) == 2.0
    assert log_hazard_index(ExpTailed(3.0)) == 1.0
    assert log_hazard_index(LogWeibullType(1.0, 2.0)) == 0.0
    assert math.isinf(log_hazard_index(GumbelGeneric(log_hazard_index=math.inf)))
    assert log_hazard_index(GumbelGeneric()) is None
    assert log_hazard_index(RegVarInf(2.0)) is None


def test_views():
    assert as_exp_tailed(WeibullType(2.0, 1.0, 0.5)) == ExpTailed(2.0, 0.5)
    assert as_exp_tailed(WeibullType(2.0, 2.0)) is None
    assert as_reg_var(LogWeibullType(3.0, 1.0, -1.0)) == RegVarInf(3.0, -1.0)
    assert as_reg_var(LogWeibullType(3.0, 2.0)) is None


def test_log_transform():
    assert log_transform(RegVarInf(2.0, 1.0)) == ExpTailed(2.0, 1.0)
    assert log_transform(ExpTailed(2.0, 1.0)) == RegVarInf(2.0, 1.0)
    assert log_transform(WeibullType(1.0, 2.0)) == LogWeibullType(1.0, 2.0)
    assert log_transform(SuperHeavy(WeibullType(1.0, 0.5))) == WeibullType(1.0, 0.5)


@pytest.mark.parametrize(
    "c",
    [RegVarInf(0.0), NegWeibull(1.0, 1.0), GumbelGeneric()],
    ids=["slowly_varying", "negweibull", "gumbel"],
)
def test_log_transform_undefined(c):
    with pytest.raises(MappingUndefined):
        log_transform(c)


@pytest.mark.parametrize(
    "a,b,expected",
    [
        (WeibullType(1.0, 2.0), ExpTailed(1.0), Ordering.STRICTLY_LIGHTER),
        (ExpTailed(2.0), ExpTailed(1.0), Ordering.STRICTLY_LIGHTER),
        (ExpTailed(1.0, 1.0), ExpTailed(1.0, 0.0), Ordering.STRICTLY_HEAVIER),
        (WeibullType(1.0, 0.5), ExpTailed(0.1), Ordering.STRICTLY_HEAVIER),
        (RegVarInf(3.0), RegVarInf(2.0), Ordering.STRICTLY_LIGHTER),
        (NegWeibull(5.0, 1.0), WeibullType(1.0, 2.0), Ordering.STRICTLY_LIGHTER),
        (NegWeibull(1.0, 1.0), NegWeibull(1.0, 2.0), Ordering.STRICTLY_HEAVIER),
        (LogWeibullType(1.0, 2.0), RegVarInf(5.0), Ordering.STRICTLY_LIGHTER),
        (RegVarInf(0.5), SuperHeavy(ExpTailed(1.0)), Ordering.STRICTLY_LIGHTER),
        (
            SuperHeavy(ExpTailed(1.0)),
            SuperHeavy(ExpTailed(2.0)),
            Ordering.STRICTLY_HEAVIER,
        ),
        (ExpTailed(1.0), WeibullType(1.0, 1.0), Ordering.SAME_SCALE),
        (GumbelGeneric(), GumbelGeneric(), Ordering.INCOMPARABLE),
        (GumbelGeneric(), ExpTailed(1.0), Ordering.INCOMPARABLE),
    ],
    ids=[
        "weibull_below_exponential",
        "larger_rate",
        "larger_prefactor",
        "heavy_weibull",
        "larger_index",
        "finite_endpoint",
        "negweibull_index",
        "lwt_below_rv",
        "rv_below_superheavy",
        "superheavy_through_logs",
        "same_scale",
        "gumbel_pair",
        "gumbel_unknown_hazard",
    ],
)
def test_dominates(a, b, expected):
    assert dominates(a, b) is expected


@given(a=tail_classes(), b=tail_classes())
def test_dominates_is_antisymmetric(a, b):
    assert dominates(a, b) is dominates(b, a).reverse()


@given(c=tail_classes())
def test_json_form(c):
    assert from_json(c.to_json()) == c


def test_json_nested():
    c = SuperHeavy(GumbelGeneric(log_hazard_index=math.inf))
    assert c.to_json()["log_class"]["endpoint"] == "inf"
    assert from_json(c.to_json()) == c


@pytest.mark.parametrize(
    "d",
    [{"kind": "Cauchy"}, {"kind": "RegVarInf", "rate": 1.0}, [1, 2]],
    ids=["unknown_kind", "unknown_field", "not_a_mapping"],
)
def test_from_json_rejects(d):
    with pytest.raises(InvalidSpec):
        from_json(d)

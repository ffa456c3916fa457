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

"""Tests for quadrature-based survivals, chi(q) curves and tail approximations."""

import math

import pytest
from read_in import spec_path
from scipy import special

from taildep.distmodel import UnivariateModel
from taildep.exceptions import PreconditionViolated, UnsupportedMDA
from taildep.quadeval import (
    ChiCurve,
    breiman_check,
    chi_curve,
    eta_diagnostic,
    joint_min_survival,
    marginal_survival,
    mixture_survival,
    product_tail_approx,
    quantile,
    upper_endpoint,
)
from taildep.specio import ConstructionSpec, read_spec_file

UNIFORM = UnivariateModel("uniform")
EXPONENTIAL = UnivariateModel("exponential")


def _exp_times_uniform(x):
    return math.exp(-x) - x * special.exp1(x)


@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 20.0])
def test_mixture_survival_exponential_uniform(x):
    value, err = mixture_survival(
        EXPONENTIAL, UNIFORM.survival, x, endpoint=1.0, breakpoints=(1.0,)
    )
    assert value == pytest.approx(_exp_times_uniform(x), rel=1e-8)
    assert err >= 0.0


def test_mixture_survival_degenerate_radius():
    value, err = mixture_survival(
        UnivariateModel("degenerate", {"value": 2.0}), UNIFORM.survival, 0.5
    )
    assert value == pytest.approx(0.75)
    assert err == 0.0


def test_mixture_survival_rejects_nonpositive_x():
    with pytest.raises(PreconditionViolated):
        mixture_survival(EXPONENTIAL, UNIFORM.survival, 0.0)


def test_pareto_uniform_survivals():
    spec = read_spec_file(spec_path("pareto_uniform"))
    # beyond x = 1 both are exact power laws
    assert marginal_survival(spec, 5.0) == pytest.approx(1.0 / 75.0, rel=1e-8)
    assert joint_min_survival(spec, 5.0) == pytest.approx(1.0 / 150.0, rel=1e-8)
    assert upper_endpoint(spec) == math.inf


@pytest.mark.parametrize("q", [0.5, 0.9, 0.99, 0.9999])
def test_quantile_inverts_survival(q):
    spec = read_spec_file(spec_path("exponential_l2"))
    x = quantile(spec, q)
    assert marginal_survival(spec, x) == pytest.approx(1.0 - q, rel=1e-7)


def test_pareto_uniform_quantile():
    spec = read_spec_file(spec_path("pareto_uniform"))
    assert quantile(spec, 0.99) == pytest.approx(math.sqrt(1.0 / 0.03), rel=1e-8)


@pytest.mark.parametrize("q", [0.0, 1.0, -0.2, 1.5])
def test_quantile_rejects_levels(q):
    spec = read_spec_file(spec_path("pareto_uniform"))
    with pytest.raises(PreconditionViolated):
        quantile(spec, q)


def test_chi_curve_constant_for_power_laws():
    spec = read_spec_file(spec_path("pareto_uniform"))
    curve = chi_curve(spec, [0.9, 0.99, 0.999])
    assert isinstance(curve, ChiCurve)
    assert curve.chi == pytest.approx((0.5, 0.5, 0.5), rel=1e-6)
    assert all(err >= 0.0 for err in curve.abs_err)
    assert curve.method == "quadrature"


def test_chi_curve_comonotone():
    spec = read_spec_file(spec_path("comonotone_uniform"))
    curve = chi_curve(spec, [0.5, 0.9, 0.99])
    assert curve.chi == pytest.approx((1.0, 1.0, 1.0), rel=1e-6)


@pytest.mark.parametrize("name", ["comonotone_uniform", "weibull_independent"])
def test_chi_curve_is_monotone(name):
    spec = read_spec_file(spec_path(name))
    chi = chi_curve(spec, [0.5, 0.9, 0.99, 0.999, 0.9999]).chi
    assert all(b <= a + 1e-6 for a, b in zip(chi, chi[1:]))


def test_chi_curve_approaches_limit():
    spec = read_spec_file(spec_path("model2"))
    curve = chi_curve(spec, [0.9, 0.99, 0.999, 0.9999])
    assert curve.chi[-1] == pytest.approx(2.0 / 3.0, abs=0.03)
    assert abs(curve.chi[-1] - 2.0 / 3.0) <= abs(curve.chi[0] - 2.0 / 3.0)


def test_chi_curve_threads_agree():
    spec = read_spec_file(spec_path("exponential_linf"))
    grid = [0.9, 0.95, 0.99]
    assert chi_curve(spec, grid, threads=1) == chi_curve(spec, grid, threads=3)


def test_chi_curve_outputs():
    spec = read_spec_file(spec_path("pareto_uniform"))
    curve = chi_curve(spec, [0.9, 0.99])
    frame = curve.frame()
    assert list(frame.columns) == ["q", "one_minus_q", "chi_q", "abs_err_est"]
    assert frame["one_minus_q"].tolist() == pytest.approx([0.1, 0.01])
    text = curve.to_csv()
    assert text.splitlines()[0] == "q,one_minus_q,chi_q,abs_err_est"
    assert len(text.splitlines()) == 3
    json_form = curve.to_json()
    assert json_form["method"] == "quadrature"
    assert len(json_form["points"]) == 2


@pytest.mark.parametrize(
    "grid",
    [[0.99, 0.9], [0.9, 0.9], [], [0.5, 1.0], [0.0, 0.5]],
    ids=["descending", "repeated", "empty", "at_one", "at_zero"],
)
def test_chi_curve_rejects_grids(grid):
    spec = read_spec_file(spec_path("pareto_uniform"))
    with pytest.raises(PreconditionViolated):
        chi_curve(spec, grid)


def test_eta_diagnostic_asymptotically_dependent():
    spec = read_spec_file(spec_path("pareto_uniform"))
    diagnostic = eta_diagnostic(spec, [1e2, 1e4, 1e6])
    assert diagnostic.fitting_form == "eta + c / log(x)"
    assert all(0.9 < r < 1.0 for r in diagnostic.ratio)
    assert list(diagnostic.ratio) == sorted(diagnostic.ratio)
    assert diagnostic.extrapolated == pytest.approx(1.0, abs=0.02)
    assert diagnostic.flags == ()


def test_eta_diagnostic_drops_underflow():
    spec = read_spec_file(spec_path("comonotone_uniform"))
    diagnostic = eta_diagnostic(spec, [5.0, 10.0, 800.0])
    assert diagnostic.x == (5.0, 10.0)
    assert diagnostic.dropped == (800.0,)
    assert "underflow_dropped" in diagnostic.flags
    assert diagnostic.ratio == pytest.approx((1.0, 1.0))
    assert diagnostic.extrapolated == pytest.approx(1.0)
    assert diagnostic.to_json()["dropped"] == [800.0]


def test_eta_diagnostic_too_few_points():
    spec = read_spec_file(spec_path("comonotone_uniform"))
    diagnostic = eta_diagnostic(spec, [5.0])
    assert diagnostic.extrapolated is None
    assert "too_few_points" in diagnostic.flags


def test_eta_diagnostic_rejects_grid_past_endpoint():
    spec = read_spec_file(spec_path("exponential_linf"))
    bounded = ConstructionSpec(UNIFORM, spec.angular)
    assert upper_endpoint(bounded) == 1.0
    with pytest.raises(PreconditionViolated):
        eta_diagnostic(bounded, [0.5, 1.0])


def test_eta_diagnostic_bounded_form():
    spec = read_spec_file(spec_path("exponential_linf"))
    bounded = ConstructionSpec(UNIFORM, spec.angular)
    diagnostic = eta_diagnostic(bounded, [0.9, 0.99, 0.999])
    assert diagnostic.fitting_form == "eta + c / (-log(x* - x))"


def test_product_tail_gumbel_radius():
    def ratio(x, order=2):
        exact = _exp_times_uniform(x)
        return exact / product_tail_approx(EXPONENTIAL, 1.0, 1.0, 1.0, x, order=order)

    assert 0.95 <= ratio(30.0) <= 1.05
    assert ratio(100.0) == pytest.approx(1.0, abs=0.005)
    # the leading term alone is off by 2 / x
    assert ratio(30.0, order=1) == pytest.approx(1.0 - 2.0 / 30.0, abs=0.01)
    assert product_tail_approx(
        EXPONENTIAL, 1.0, 1.0, 1.0, 30.0, order=1
    ) == pytest.approx(math.exp(-30.0) / 30.0)
    assert product_tail_approx(EXPONENTIAL, 1.0, 1.0, 1.0, 30.0) == pytest.approx(
        math.exp(-30.0) / 32.0
    )


def test_product_tail_second_order_weibull_radius():
    weibull = UnivariateModel("weibull", {"shp": 2.0})
    exact, _ = mixture_survival(
        weibull, UNIFORM.survival, 5.0, endpoint=1.0, breakpoints=(1.0,)
    )
    errors = [
        abs(exact / product_tail_approx(weibull, 1.0, 1.0, 1.0, 5.0, order=k) - 1.0)
        for k in (1, 2)
    ]
    assert errors[1] < 0.02 < errors[0]


def test_product_tail_order():
    with pytest.raises(PreconditionViolated, match="order"):
        product_tail_approx(EXPONENTIAL, 1.0, 1.0, 1.0, 30.0, order=3)


def test_product_tail_negative_weibull_radius():
    x = 0.99
    exact, _ = mixture_survival(
        UNIFORM, UNIFORM.survival, x, endpoint=1.0, breakpoints=(1.0,)
    )
    approx = product_tail_approx(UNIFORM, 1.0, 1.0, 1.0, x)
    assert approx == pytest.approx(0.01 ** 2 / 2.0)
    assert exact / approx == pytest.approx(1.0, abs=0.01)


def test_product_tail_negative_weibull_past_endpoint():
    with pytest.raises(PreconditionViolated):
        product_tail_approx(UNIFORM, 1.0, 1.0, 1.0, 1.0)


def test_product_tail_unsupported_domain():
    with pytest.raises(UnsupportedMDA):
        pareto = UnivariateModel("pareto", {"shp": 2.0})
        product_tail_approx(pareto, 1.0, 1.0, 1.0, 10.0)


@pytest.mark.parametrize("alpha", [1.0, 2.0])
@pytest.mark.parametrize(
    "w",
    [UNIFORM, UnivariateModel("beta", {"shp1": 2.0, "shp2": 2.0})],
    ids=["uniform", "beta22"],
)
def test_breiman_ratio(alpha, w):
    r = UnivariateModel("pareto", {"shp": alpha})
    assert breiman_check(r, w, 1e4) == pytest.approx(1.0, abs=0.02)


def test_breiman_needs_regular_variation():
    with pytest.raises(PreconditionViolated):
        breiman_check(EXPONENTIAL, UNIFORM, 10.0)

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

"""Tests for sampling, rank-based estimators and verification reports."""

import math

import numpy as np
import pandas as pd
import pytest
from read_in import spec_path

from taildep.depcalc import ONE, Defined, DependenceSummary, Unknown, coefficients
from taildep.exceptions import (
    InvalidK,
    InvalidSpec,
    PreconditionViolated,
    TooFewExceedances,
)
from taildep.simest import (
    SAMPLE_BLOCK,
    SampleBatch,
    default_k,
    empirical_chi,
    hill_eta,
    pseudo_observations,
    read_batch_csv,
    sample,
    verify,
)
from taildep.specio import read_spec_file


def _batch(pairs):
    return SampleBatch(pairs=np.asarray(pairs, dtype=float), seed=None, fingerprint="")


def _gaussian_batch(rho, n, seed=1):
    rng = np.random.default_rng(seed)
    cov = [[1.0, rho], [rho, 1.0]]
    return _batch(rng.multivariate_normal([0.0, 0.0], cov, size=n))


def test_sample_shape_and_fingerprint():
    spec = read_spec_file(spec_path("exponential_l2"))
    batch = sample(spec, 1000, seed=3)
    assert batch.pairs.shape == (1000, 2)
    assert batch.n == 1000
    assert batch.seed == 3
    assert batch.fingerprint == spec.fingerprint
    assert np.all(batch.pairs >= 0.0)


def test_sample_is_reproducible():
    spec = read_spec_file(spec_path("model2"))
    first = sample(spec, 500, seed=11)
    second = sample(spec, 500, seed=11)
    other = sample(spec, 500, seed=12)
    np.testing.assert_array_equal(first.pairs, second.pairs)
    assert not np.array_equal(first.pairs, other.pairs)


def test_sample_independent_of_threads():
    spec = read_spec_file(spec_path("exponential_linf"))
    n = SAMPLE_BLOCK + 100
    serial = sample(spec, n, seed=5, threads=1)
    parallel = sample(spec, n, seed=5, threads=2)
    np.testing.assert_array_equal(serial.pairs, parallel.pairs)


def test_sample_rejects_empty():
    spec = read_spec_file(spec_path("exponential_l2"))
    with pytest.raises(PreconditionViolated):
        sample(spec, 0, seed=1)


def test_pseudo_observations_in_unit_square():
    u = pseudo_observations(_batch([[3.0, 1.0], [1.0, 2.0], [2.0, 3.0]]))
    np.testing.assert_allclose(u, [[0.75, 0.25], [0.25, 0.5], [0.5, 0.75]])


def test_estimators_depend_on_ranks_only():
    batch = _gaussian_batch(0.5, 5000)
    warped = _batch(np.exp(batch.pairs) + 7.0)
    assert empirical_chi(batch, 0.95) == empirical_chi(warped, 0.95)
    assert hill_eta(batch) == hill_eta(warped)


def test_empirical_chi_independent_uniforms():
    rng = np.random.default_rng(2)
    batch = _batch(rng.uniform(size=(100_000, 2)))
    estimate, std_err = empirical_chi(batch, 0.99)
    assert std_err > 0.0
    assert abs(estimate - 0.01) <= 4.0 * std_err


def test_empirical_chi_comonotone():
    x = np.random.default_rng(4).exponential(size=2000)
    estimate, std_err = empirical_chi(_batch(np.column_stack([x, 2.0 * x])), 0.9)
    assert estimate == pytest.approx(1.0)
    p = 201.0 / 202.0
    assert std_err == pytest.approx(math.sqrt(p * (1.0 - p) / 200.0))


def test_empirical_chi_too_few_exceedances():
    with pytest.raises(TooFewExceedances):
        empirical_chi(_gaussian_batch(0.0, 1000), 0.99)


@pytest.mark.parametrize("q", [0.0, 1.0])
def test_empirical_chi_rejects_levels(q):
    with pytest.raises(PreconditionViolated):
        empirical_chi(_gaussian_batch(0.0, 1000), q)


@pytest.mark.parametrize("rho", [0.0, 0.5])
def test_hill_eta_gaussian(rho):
    estimate, std_err = hill_eta(_gaussian_batch(rho, 50_000))
    assert estimate == pytest.approx((1.0 + rho) / 2.0, abs=0.1)
    assert std_err == pytest.approx(estimate / math.sqrt(default_k(50_000)))


def test_default_k():
    assert default_k(10_000) == 251


@pytest.mark.parametrize("k", [5, 501])
def test_hill_eta_invalid_k(k):
    with pytest.raises(InvalidK):
        hill_eta(_gaussian_batch(0.0, 1000), k)


def test_batch_csv(tmp_path):
    batch = _batch([[1.0, 2.0], [0.5, 0.25]])
    assert batch.to_csv().splitlines()[0] == "x1,x2"
    path = tmp_path / "pairs.csv"
    batch.to_csv(path)
    read_back = read_batch_csv(path)
    np.testing.assert_array_equal(read_back.pairs, batch.pairs)
    assert read_back.fingerprint == "file:pairs.csv"


@pytest.mark.parametrize(
    "frame,match",
    [
        (pd.DataFrame({"a": [1.0], "b": [2.0]}), "columns x1 and x2"),
        (pd.DataFrame({"x1": [1.0], "x2": [math.inf]}), "non-finite"),
    ],
    ids=["columns", "non_finite"],
)
def test_batch_csv_rejects(tmp_path, frame, match):
    path = tmp_path / "bad.csv"
    frame.to_csv(path, index=False)
    with pytest.raises(InvalidSpec, match=match):
        read_batch_csv(path)


def test_batch_csv_missing_file(tmp_path):
    with pytest.raises(InvalidSpec, match="Cannot read"):
        read_batch_csv(tmp_path / "absent.csv")


def test_verify_passes_for_power_law_radius():
    spec = read_spec_file(spec_path("pareto_uniform"))
    symbolic = coefficients(spec)
    report = verify(spec, symbolic, n=20_000, q=0.95, seed=7)
    assert report.passed
    assert [c.name for c in report.checks] == ["chi", "chi_q", "eta"]
    chi = report.checks[0]
    assert chi.symbolic == pytest.approx(0.5)
    assert chi.chi_q == pytest.approx(0.5, rel=1e-6)
    assert chi.distance == pytest.approx(0.0, abs=1e-6)
    eta = report.checks[2]
    assert eta.tolerance >= 0.05
    json_form = report.to_json()
    assert json_form["passed"] is True
    assert json_form["fingerprint"] == spec.fingerprint
    assert json_form["k"] == default_k(20_000)


def test_verify_passes_for_comonotone_pair():
    spec = read_spec_file(spec_path("comonotone_uniform"))
    symbolic = DependenceSummary(ONE, ONE, "comonotone")
    report = verify(spec, symbolic, n=2000, q=0.9, seed=3)
    chi = report.checks[0]
    assert chi.std_err > 0.0
    assert chi.status == "pass"
    assert report.passed


def test_verify_flags_wrong_chi():
    spec = read_spec_file(spec_path("pareto_uniform"))
    wrong = DependenceSummary(Defined(0.95), ONE, "handwritten")
    report = verify(spec, wrong, n=20_000, q=0.95, seed=7)
    assert not report.passed
    assert report.checks[0].status == "fail"


def test_verify_skips_unknown_coefficients():
    spec = read_spec_file(spec_path("exponential_l2"))
    unknown = DependenceSummary(Unknown("no rule"), Unknown("no rule"), "no_rule")
    report = verify(spec, unknown, n=2000, q=0.9, seed=1)
    assert [c.status for c in report.checks] == ["skipped", "skipped"]
    assert report.passed

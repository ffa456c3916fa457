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

"""Top-level functions for taildep."""

import logging
import math
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from . import quadeval, simest
from .depcalc import DEFAULT_MC_BUDGET, DependenceSummary, Unknown, coefficients
from .exceptions import UnknownUnderStrict
from .specio import ConstructionSpec, read_spec_file, spec_from_dict
from .tailclass import classify_parametric, primary_class
from .utils import JSONDict
from .validation import catalog_section, families_template, validate_params
from .views import view_by_docstring

logger = logging.getLogger(__name__)


def classify(family: str, params: Optional[JSONDict] = None) -> JSONDict:
    """Tail classes of a parametric family.

    Parameters
    ----------
    family : str
        Catalog name.
    params : Optional[JSONDict]
        Parameters of the family. Missing parameters take their defaults.

    Returns
    -------
    A dictionary with the family, its parameters with defaults fixed, the
    memberships and the most informative class among them.

    Raises
    ------
    :exc:`UnknownFamily`
    :exc:`InvalidParams`
    """
    params = validate_params(family, params or {}, template=families_template())
    docs = view_by_docstring(catalog_section(families_template(), family))[family]
    classes = classify_parametric(family, params)
    primary = primary_class(classes)
    return {
        "family": family,
        "parameters": [
            {"name": k, "value": v, "docstring": docs[k]} for k, v in params.items()
        ],
        "classes": [c.to_json() for c in classes],
        "primary": None if primary is None else primary.to_json(),
    }


def load_spec(source: Union[str, Path, JSONDict]) -> ConstructionSpec:
    """Construction from a spec document, given as a file or a dictionary."""
    if isinstance(source, dict):
        return spec_from_dict(source)
    return read_spec_file(source)


def coeffs(
    spec: ConstructionSpec,
    *,
    strict: bool = False,
    seed: Optional[int] = None,
    mc_budget: int = DEFAULT_MC_BUDGET,
) -> DependenceSummary:
    """Symbolic ``chi`` and ``eta`` of a construction.

    Parameters
    ----------
    spec : ConstructionSpec
    strict : bool
        Raise instead of returning undecided coefficients.
    seed : Optional[int]
        Seed of the Monte Carlo fallback used when quadrature fails.
    mc_budget : int
        Draws of the Monte Carlo fallback.

    Raises
    ------
    :exc:`UnknownUnderStrict`
        In strict mode, when either coefficient is unknown.
    """
    rng = None if seed is None else np.random.default_rng(seed)
    summary = coefficients(spec, mc_budget=mc_budget, rng=rng)
    unknown = [c for c in (summary.chi, summary.eta) if isinstance(c, Unknown)]
    if strict and unknown:
        raise UnknownUnderStrict(
            f"Rule {summary.rule} leaves the coefficients undecided: "
            f"{unknown[0].reason}"
        )
    return summary


def curve(
    spec: ConstructionSpec,
    q_grid: Sequence[float],
    *,
    with_eta: bool = False,
    threads: Optional[int] = None,
) -> Tuple[pd.DataFrame, JSONDict]:
    """``chi(q)`` over a grid of levels, optionally with ``eta`` ratios.

    Parameters
    ----------
    spec : ConstructionSpec
    q_grid : Sequence[float]
        Strictly ascending levels in (0, 1).
    with_eta : bool
        Add the quantile ``x`` of each level and the ratio
        ``log P(X1 > x) / log P(X1 > x, X2 > x)``. Dropped points hold NaN.
    threads : Optional[int]

    Returns
    -------
    The curve as a data frame, and its JSON form.
    """
    chi = quadeval.chi_curve(spec, q_grid, threads=threads)
    frame = chi.frame()
    doc = chi.to_json()
    if with_eta:
        xs = [quadeval.quantile(spec, q) for q in chi.q]
        diag = quadeval.eta_diagnostic(spec, xs, threads=threads)
        ratios = dict(zip(diag.x, diag.ratio))
        frame["x"] = xs
        frame["eta_ratio"] = [ratios.get(x, math.nan) for x in xs]
        doc["eta"] = diag.to_json()
    return frame, doc


def simulate(
    spec: ConstructionSpec, n: int, seed: int, *, threads: Optional[int] = None
) -> simest.SampleBatch:
    """``n`` seeded draws of the construction."""
    return simest.sample(spec, n, seed, threads=threads)


def estimate(
    batch: simest.SampleBatch, *, q: float, k: Optional[int] = None
) -> JSONDict:
    """Empirical ``chi`` at level ``q`` and the Hill estimate of ``eta``.

    Raises
    ------
    :exc:`TooFewExceedances`
    :exc:`InvalidK`
    """
    k = simest.default_k(batch.n) if k is None else k
    chi, chi_se = simest.empirical_chi(batch, q)
    eta, eta_se = simest.hill_eta(batch, k)
    return {
        "n": batch.n,
        "seed": batch.seed,
        "q": q,
        "chi_q": chi,
        "chi_std_err": chi_se,
        "k": k,
        "eta": eta,
        "eta_std_err": eta_se,
    }


def verify(
    spec: ConstructionSpec,
    *,
    n: int,
    q: float,
    seed: int,
    k: Optional[int] = None,
    threads: Optional[int] = None,
) -> simest.VerifyReport:
    """Check the symbolic coefficients against a fresh seeded sample."""
    symbolic = coeffs(spec, seed=seed)
    return simest.verify(spec, symbolic, n=n, q=q, seed=seed, k=k, threads=threads)

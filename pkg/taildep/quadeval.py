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

"""Quadrature evaluation of constructions below the limit.

Survival functions of ``X1 = R W1`` and of ``min(X1, X2) = R min(W1, W2)``
are mixtures over the radial law. They are integrated on the scale of
``log r`` and split where the angular survival functions have kinks.
"""

import logging
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy import integrate, optimize, special

from .distmodel import UnivariateModel, is_regularly_varying
from .exceptions import NonConvergent, PreconditionViolated, UnsupportedMDA
from .specio import ConstructionSpec
from .tailclass import MDA, NegWeibull, mda
from .utils import JSONDict, SIGNIFICANT_DIGITS, map_ordered

logger = logging.getLogger(__name__)

QUAD_RTOL = 1e-10
QUAD_ACCEPT_RTOL = 1e-6
QUANTILE_TOL = 1e-11
UNDERFLOW = 1e-300
EXTRAPOLATION_POINTS = 3
_MAX_BRACKET_STEPS = 2100
LOG_STEP = 1e-4

_Survival = Callable[[float], float]


def _quad(f: Callable[[float], float], a: float, b: float) -> Tuple[float, float]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err, _info, *message = integrate.quad(
            f, a, b, epsabs=0.0, epsrel=QUAD_RTOL, limit=500, full_output=1
        )
    if message and err > QUAD_ACCEPT_RTOL * abs(value) + UNDERFLOW:
        raise NonConvergent(f"Quadrature on [{a}, {b}] failed: {message[0]}")
    return float(value), float(err)


def mixture_survival(
    radial: UnivariateModel,
    sf: _Survival,
    x: float,
    *,
    endpoint: float = math.inf,
    breakpoints: Sequence[float] = (),
) -> Tuple[float, float]:
    """``P(R V > x) = int P(V > x / r) dF_R(r)`` for ``V`` independent of ``R``.

    Parameters
    ----------
    radial : UnivariateModel
    sf : Callable
        Survival function of ``V``.
    x : float
    endpoint : float
        Upper endpoint of ``V``, below which ``r`` contributes nothing.
    breakpoints : Sequence[float]
        Kinks of ``sf``, mapped to ``r = x / b`` split points.

    Returns
    -------
    value, abs_err : Tuple[float, float]

    Raises
    ------
    :exc:`NonConvergent`
    """
    if not x > 0:
        raise PreconditionViolated(f"Survival is evaluated at x > 0, got {x}")
    if radial.is_degenerate:
        return float(sf(x / radial.support()[0])), 0.0

    lo, hi = radial.support()
    lo = max(lo, x / endpoint if math.isfinite(endpoint) else 0.0)
    if lo >= hi:
        return 0.0, 0.0

    def integrand(u: float) -> float:
        r = math.exp(u)
        density = float(radial.pdf(r))
        if density == 0.0:
            return 0.0
        return density * r * float(sf(x / r))

    a = math.log(lo) if lo > 0 else -math.inf
    b = math.log(hi) if math.isfinite(hi) else math.inf
    knots = {math.log(radial.median())}
    knots.update(math.log(x / p) for p in breakpoints if p > 0)
    cuts = [a] + sorted(k for k in knots if a < k < b) + [b]
    logger.debug(f"Mixture at x = {x} split at r = {[math.exp(c) for c in cuts]}")

    pieces, errors = [], []
    for left, right in zip(cuts[:-1], cuts[1:]):
        value, err = _quad(integrand, left, right)
        pieces.append(value)
        errors.append(err)
    return math.fsum(pieces), math.fsum(errors)


def _margin_mixture(spec: ConstructionSpec, x: float) -> Tuple[float, float]:
    angular = spec.angular
    return mixture_survival(
        spec.radial,
        angular.margin_survival,
        x,
        endpoint=angular.endpoint(),
        breakpoints=angular.breakpoints(),
    )


def _min_mixture(spec: ConstructionSpec, x: float) -> Tuple[float, float]:
    angular = spec.angular
    return mixture_survival(
        spec.radial,
        angular.min_survival,
        x,
        endpoint=angular.min_endpoint(),
        breakpoints=angular.breakpoints(),
    )


def marginal_survival(spec: ConstructionSpec, x: float) -> float:
    """``P(X1 > x)``."""
    return _margin_mixture(spec, x)[0]


def joint_min_survival(spec: ConstructionSpec, x: float) -> float:
    """``P(X1 > x, X2 > x)``."""
    return _min_mixture(spec, x)[0]


def upper_endpoint(spec: ConstructionSpec) -> float:
    return spec.radial.endpoint() * spec.angular.endpoint()


def quantile(spec: ConstructionSpec, q: float) -> float:
    """Quantile of ``X1`` at level ``q``.

    The bracket grows geometrically from the product of the radial and
    angular medians, then Brent's method solves ``P(X1 > x) = 1 - q`` on
    ``log x``.

    Raises
    ------
    :exc:`NonConvergent`
    """
    if not 0 < q < 1:
        raise PreconditionViolated(f"q must be in (0, 1), got {q}")
    target = 1.0 - q
    top = upper_endpoint(spec)
    start = spec.radial.median() * spec.angular._median()
    start = min(start, 0.5 * top) if math.isfinite(top) else start

    def excess(u: float) -> float:
        return marginal_survival(spec, math.exp(u)) - target

    lo = hi = math.log(start)
    for _ in range(_MAX_BRACKET_STEPS):
        if excess(hi) <= 0:
            break
        lo = hi
        hi = (
            hi + math.log(2.0)
            if not math.isfinite(top)
            else math.log(0.5 * (math.exp(hi) + top))
        )
    else:
        raise NonConvergent(f"Could not bracket the quantile at q = {q}")
    for _ in range(_MAX_BRACKET_STEPS):
        if excess(lo) >= 0:
            break
        hi, lo = lo, lo - math.log(2.0)
    else:
        raise NonConvergent(f"Could not bracket the quantile at q = {q}")
    if lo == hi:
        return math.exp(lo)

    root = optimize.brentq(excess, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    x = math.exp(root)
    miss = abs(excess(root))
    if miss > QUANTILE_TOL:
        logger.debug(f"Quantile at q = {q} misses the level by {miss}")
    return x


# Sub-asymptotic curves.


@dataclass(frozen=True)
class ChiCurve:
    """``chi(q) = P(X1 > F^-1(q), X2 > F^-1(q)) / (1 - q)`` on a grid."""

    q: Tuple[float, ...]
    chi: Tuple[float, ...]
    abs_err: Tuple[float, ...]
    method: str = "quadrature"
    rtol: float = QUAD_RTOL

    def frame(self) -> pd.DataFrame:
        q = np.asarray(self.q)
        return pd.DataFrame(
            {
                "q": q,
                "one_minus_q": 1.0 - q,
                "chi_q": np.asarray(self.chi),
                "abs_err_est": np.asarray(self.abs_err),
            }
        )

    def to_json(self) -> JSONDict:
        return {
            "method": self.method,
            "rtol": self.rtol,
            "points": self.frame().to_dict(orient="records"),
        }

    def to_csv(self, path: Optional[Union[str, Path]] = None) -> Optional[str]:
        return self.frame().to_csv(
            path, index=False, float_format=f"%.{SIGNIFICANT_DIGITS}g"
        )


def _check_grid(grid: Sequence[float], name: str) -> List[float]:
    values = [float(v) for v in grid]
    if not values or any(b <= a for a, b in zip(values[:-1], values[1:])):
        raise PreconditionViolated(f"The {name} grid must be strictly ascending")
    return values


def chi_point(spec: ConstructionSpec, q: float) -> Tuple[float, float]:
    x = quantile(spec, q)
    joint, err = _min_mixture(spec, x)
    logger.debug(f"chi at q = {q}: x = {x}, joint = {joint} +- {err}")
    return joint / (1.0 - q), err / (1.0 - q)


def chi_curve(
    spec: ConstructionSpec, q_grid: Sequence[float], *, threads: Optional[int] = None
) -> ChiCurve:
    """Evaluate ``chi(q)`` over an ascending grid, in parallel."""
    grid = _check_grid(q_grid, "q")
    if grid[0] <= 0 or grid[-1] >= 1:
        raise PreconditionViolated("q must lie in (0, 1)")
    logger.info(f"chi curve at {len(grid)} points")
    results = map_ordered(lambda q: chi_point(spec, q), grid, threads=threads)
    return ChiCurve(
        q=tuple(grid),
        chi=tuple(r[0] for r in results),
        abs_err=tuple(r[1] for r in results),
    )


@dataclass(frozen=True)
class EtaDiagnostic:
    """Ratios ``log P(X1 > x) / log P(X1 > x, X2 > x)`` and their limit.

    ``extrapolated`` fits ``eta + c / L`` through the last points, with
    ``L = log x`` for unbounded supports and ``L = -log(x* - x)`` below a
    finite endpoint ``x*``.
    """

    x: Tuple[float, ...]
    ratio: Tuple[float, ...]
    extrapolated: Optional[float]
    fitting_form: str
    dropped: Tuple[float, ...] = ()
    flags: Tuple[str, ...] = field(default=(), compare=False)

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"x": np.asarray(self.x), "eta_ratio": np.asarray(self.ratio)}
        )

    def to_json(self) -> JSONDict:
        return {
            "points": self.frame().to_dict(orient="records"),
            "extrapolated": self.extrapolated,
            "fitting_form": self.fitting_form,
            "dropped": list(self.dropped),
            "flags": list(self.flags),
        }


def eta_diagnostic(
    spec: ConstructionSpec, x_grid: Sequence[float], *, threads: Optional[int] = None
) -> EtaDiagnostic:
    """Pointwise ``eta`` ratios over an ascending grid and an extrapolated
    limit. Points where either survival falls below 1e-300 are dropped and
    flagged."""
    grid = _check_grid(x_grid, "x")
    top = upper_endpoint(spec)
    if math.isfinite(top) and grid[-1] >= top:
        raise PreconditionViolated(f"The x grid must stay below the endpoint {top}")

    pairs = map_ordered(
        lambda x: (marginal_survival(spec, x), joint_min_survival(spec, x)),
        grid,
        threads=threads,
    )
    kept, ratios, dropped = [], [], []
    for x, (margin, joint) in zip(grid, pairs):
        if margin < UNDERFLOW or joint < UNDERFLOW or margin >= 1.0:
            dropped.append(x)
            continue
        kept.append(x)
        ratios.append(math.log(margin) / math.log(joint))
    flags = []
    if dropped:
        flags.append("underflow_dropped")
        logger.warning(f"Dropped {len(dropped)} grid points with survival < 1e-300")

    if math.isfinite(top):
        form = "eta + c / (-log(x* - x))"
        scale = [-math.log(top - x) for x in kept]
    else:
        form = "eta + c / log(x)"
        scale = [math.log(x) for x in kept]
    usable = [(s, r) for s, r in zip(scale, ratios) if s > 0]
    extrapolated = None
    if len(usable) >= 2:
        tail = usable[-EXTRAPOLATION_POINTS:]
        inverse_scale = [1.0 / s for s, _ in tail]
        _, intercept = np.polyfit(inverse_scale, [r for _, r in tail], 1)
        extrapolated = float(intercept)
    else:
        flags.append("too_few_points")
        logger.warning("Too few usable grid points to extrapolate eta")
    return EtaDiagnostic(
        x=tuple(kept),
        ratio=tuple(ratios),
        extrapolated=extrapolated,
        fitting_form=form,
        dropped=tuple(dropped),
        flags=tuple(flags),
    )


# Asymptotic approximations of products.


def product_tail_approx(
    r: UnivariateModel,
    s_endpoint: float,
    s_alpha: float,
    s_ell: float,
    x: float,
    *,
    order: int = 2,
) -> float:
    """Tail approximation of ``R S`` for ``S`` bounded by ``s_endpoint`` with
    ``P(S > s_endpoint - t) ~ s_ell t^s_alpha``.

    ``S`` is rescaled to the unit endpoint and ``R`` by ``s_endpoint``.

    With ``order=1`` a Gumbel radius gives the leading term
    ``Gamma(1 + a) s_ell (s_endpoint / w)^a P(R > y)``, with ``y = x / s_endpoint``
    and ``w = y hazard(y)``. The default ``order=2`` divides it by
    ``1 + (1 + e / 2) a (a + 1) / w``, where ``e`` is the elasticity of the
    hazard at ``y``. For an exponential radius and a uniform ``S`` the
    relative error drops from ``2 / x`` to ``O(x^-2)``. The negative Weibull
    case always uses the leading term.

    Raises
    ------
    :exc:`PreconditionViolated`
        For an order other than 1 or 2, or ``x`` past the endpoint.
    :exc:`UnsupportedMDA`
        Unless ``R`` is in the Gumbel or negative Weibull domain.
    """
    if order not in (1, 2):
        raise PreconditionViolated(f"order must be 1 or 2, got {order}")
    c = r.tail_class()
    domain = mda(c) if c is not None else None
    gamma_s = special.gamma(1.0 + s_alpha)
    if domain is MDA.GUMBEL:
        y = x / s_endpoint
        aux = y * float(r.hazard(y))
        leading = gamma_s * s_ell * (s_endpoint / aux) ** s_alpha
        leading *= float(r.survival(y))
        if order == 1:
            return float(leading)
        elasticity = _hazard_elasticity(r, y)
        correction = (1.0 + 0.5 * elasticity) * s_alpha * (s_alpha + 1.0) / aux
        return float(leading / (1.0 + correction))
    if domain is MDA.NEGATIVE_WEIBULL and isinstance(c, NegWeibull):
        top = c.endpoint * s_endpoint
        s = top - x
        if not s > 0:
            raise PreconditionViolated(f"x must be below the endpoint {top}")
        alpha_r = c.alpha
        constant = (
            gamma_s
            * special.gamma(1.0 + alpha_r)
            / special.gamma(1.0 + s_alpha + alpha_r)
        )
        tail_s = s_ell * (s / c.endpoint) ** s_alpha
        return float(constant * tail_s * float(r.survival(c.endpoint - s / s_endpoint)))
    raise UnsupportedMDA(f"No product tail approximation for {c}")


def _hazard_elasticity(r: UnivariateModel, y: float) -> float:
    """``d log hazard / d log y``, by central differences."""
    up, down = (float(r.hazard(y * math.exp(s * LOG_STEP))) for s in (1.0, -1.0))
    return (math.log(up) - math.log(down)) / (2.0 * LOG_STEP)


def breiman_check(r: UnivariateModel, w: UnivariateModel, x: float) -> float:
    """``P(R W > x) / (E(W^a) P(R > x))`` for ``R`` regularly varying of
    index ``a``, which tends to 1."""
    rv = is_regularly_varying(r)
    if rv is None:
        raise PreconditionViolated(f"{r!r} is not regularly varying")
    moment = w.moment(rv.alpha)
    if not math.isfinite(moment):
        raise PreconditionViolated(f"E(W^{rv.alpha}) is infinite")
    if w.is_degenerate:
        value = float(r.survival(x / w.support()[0]))
    else:
        value, _ = mixture_survival(
            r, w.survival, x, endpoint=w.endpoint(), breakpoints=(w.endpoint(),)
        )
    return value / (moment * float(r.survival(x)))

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

"""Geometry of the norm constraining the angular pair.

An angular pair on the sphere ``{nu(w1, w2) = 1}`` is parameterized by
``z`` in [0, 1] through ``tau(z) = z / nu(z, 1 - z)``, the pair being
``(tau(z), tau(1 - z))``. For a standardized norm, ``nu >= max`` with
equality attained, so ``tau <= 1``. The :class:`NormProfile` collects what
the coefficient rules need: ``zeta = tau(1/2)``, the interval ``[b1, b2]``
where ``tau = 1``, the indices of the contact of ``tau`` with 1 and, for a
contact at 1/2, the one-sided derivatives of ``tau`` there.
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Tuple, Union

import numpy as np
import pandas as pd
from scipy import optimize, stats

from .exceptions import InvalidSpec, NotANorm, ProfileUnresolved
from .utils import JSONDict
from .validation import norms_template, validate_params

logger = logging.getLogger(__name__)

PLATEAU_TOL = 1e-12
PLATEAU_TOL_COARSE = 1e-10
PLATEAU_MIN_WIDTH = 1e-9
PLATEAU_WIDTH_RATIO = 0.9
REGRESSION_GRID = np.geomspace(1e-8, 1e-3, 20)
REGRESSION_MIN_R2 = 0.999
GAP_NOISE_FLOOR = 1e-13
RICHARDSON_STEPS = (1e-4, 5e-5, 2.5e-5)

_PROBE = np.linspace(0.0, 1.0, 41)


class NormSpec:
    """A symmetric norm on the positive quadrant.

    Parameters
    ----------
    kind : str
        One of ``lp``, ``linf``, ``theta_mix``, ``mahalanobis``, ``custom``.
    params : JSONDict
        Parameters of the kind.
    scale : float
        The norm evaluates to ``nu_raw / scale``. Set by :func:`standardize`.
    simplex : Optional[Callable]
        For ``custom`` norms, ``z -> nu(z, 1 - z)``.

    Raises
    ------
    :exc:`InvalidSpec`
        For unknown kinds.
    :exc:`InvalidParams`
    """

    def __init__(
        self,
        kind: str,
        params: Optional[JSONDict] = None,
        *,
        scale: float = 1.0,
        simplex: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    ):
        self.kind = kind
        if kind == "custom" and simplex is not None:
            self.params = dict(params or {})
        else:
            self.params = validate_params(
                kind, params or {}, template=norms_template(), missing=InvalidSpec
            )
        if kind == "custom" and simplex is None:
            simplex = _read_simplex_table(self.params["table"])
        self.scale = scale
        self._simplex = simplex
        self._profile = None  # type: Optional[NormProfile]

    def __repr__(self) -> str:
        return f"NormSpec({self.kind!r}, {self.params!r}, scale={self.scale!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NormSpec)
            and (self.kind, self.params, self.scale, self._simplex)
            == (other.kind, other.params, other.scale, other._simplex)
        )

    def __hash__(self) -> int:
        return hash((self.kind, tuple(sorted(self.params.items())), self.scale))

    def to_json(self) -> JSONDict:
        return {"kind": self.kind, **self.params}

    def raw(self, x, y):
        """The norm before rescaling."""
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        hi, lo = np.maximum(x, y), np.minimum(x, y)
        if self.kind == "lp":
            p = self.params["p"]
            with np.errstate(divide="ignore", invalid="ignore"):
                r = np.where(hi > 0, lo / hi, 0.0)
            return hi * (1.0 + r**p) ** (1.0 / p)
        if self.kind == "linf":
            return hi
        if self.kind == "theta_mix":
            theta = self.params["theta"]
            return theta * hi + (1.0 - theta) * lo
        if self.kind == "mahalanobis":
            rho = self.params["rho"]
            return np.sqrt((x * x - 2.0 * rho * x * y + y * y) / (1.0 - rho * rho))
        s = x + y
        with np.errstate(divide="ignore", invalid="ignore"):
            z = np.where(s > 0, x / np.where(s > 0, s, 1.0), 0.5)
        return s * self._simplex(z)

    def __call__(self, x, y):
        return self.raw(x, y) / self.scale

    @property
    def is_standardized(self) -> bool:
        return self.scale == _min_on_max_sphere(self, raw=True)


def make_norm(kind: str, params: Optional[JSONDict] = None) -> NormSpec:
    """A standardized norm of a catalog kind."""
    return standardize(NormSpec(kind, params))


def _read_simplex_table(path: Union[str, Path]) -> Callable[[np.ndarray], np.ndarray]:
    """Read ``z, nu(z, 1 - z)`` pairs, interpolated linearly.

    Raises
    ------
    :exc:`InvalidSpec`
        If the file is missing or malformed.
    :exc:`NotANorm`
        If the table is not symmetric about 1/2 or not convex.
    """
    path = Path(path)
    if not path.exists():
        raise InvalidSpec(f"Norm table {path} does not exist")
    try:
        table = pd.read_csv(path)
        z = table["z"].to_numpy(dtype=float)
        nu = table["nu"].to_numpy(dtype=float)
    except (KeyError, ValueError, pd.errors.ParserError) as e:
        raise InvalidSpec(f"Norm table {path} needs numeric columns z and nu") from e
    if len(z) < 3 or z[0] != 0.0 or z[-1] != 1.0 or np.any(np.diff(z) <= 0):
        raise InvalidSpec(f"Norm table {path} must cover [0, 1] in ascending order")
    if not np.allclose(np.interp(1.0 - z, z, nu), nu, rtol=0.0, atol=1e-9):
        raise NotANorm(f"Norm table {path} is not symmetric about 1/2")
    slopes = np.diff(nu) / np.diff(z)
    if np.any(np.diff(slopes) < -1e-9):
        raise NotANorm(f"Norm table {path} is not convex")
    logger.info(f"Read {len(z)} points of a tabulated norm from {path}")

    def simplex(t):
        return np.interp(t, z, nu)

    return simplex


def _probe(norm: NormSpec) -> None:
    x, y = np.meshgrid(_PROBE, _PROBE)
    v = norm.raw(x, y)
    if not np.all(np.isfinite(v)) or np.any(v < 0):
        raise NotANorm(f"{norm!r} is not finite and nonnegative on the quadrant")
    if not np.allclose(v, norm.raw(y, x), rtol=1e-12, atol=1e-14):
        raise NotANorm(f"{norm!r} is not symmetric")
    for t in (0.5, 3.0):
        if not np.allclose(norm.raw(t * x, t * y), t * v, rtol=1e-10, atol=1e-14):
            raise NotANorm(f"{norm!r} is not positively homogeneous")
    if np.any(v[1:, 1:] <= 0):
        raise NotANorm(f"{norm!r} vanishes off the origin")


def _min_on_max_sphere(norm: NormSpec, *, raw: bool = False) -> float:
    """Scale of the standardized norm, its minimum over ``{max(x, y) = 1}``.

    Mahalanobis norms keep the unit diagonal of their correlation matrix
    instead. For ``rho < 0`` the minimum on the quadrant is ``1 / sqrt(1 - rho^2)``
    and the contact with the maximum happens at the positive parts of points
    with one negative coordinate.
    """
    f = norm.raw if raw else norm
    if norm.kind in ("lp", "linf", "mahalanobis"):
        k = 1.0
    elif norm.kind == "theta_mix":
        k = min(norm.params["theta"], 1.0)
    else:
        grid = np.linspace(0.0, 1.0, 2001)
        values = f(np.ones_like(grid), grid)
        i = int(np.argmin(values))
        lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
        res = optimize.minimize_scalar(
            lambda y: float(f(1.0, y)), bounds=(lo, hi), method="bounded",
            options={"xatol": 1e-12},
        )
        return float(min(values[i], res.fun))
    return k if raw else k / norm.scale


def standardize(norm: NormSpec) -> NormSpec:
    """Rescale a norm so that ``nu >= max`` with equality attained.

    Idempotent.

    Raises
    ------
    :exc:`NotANorm`
        If the symmetry or homogeneity probes fail.
    """
    _probe(norm)
    k = _min_on_max_sphere(norm, raw=True)
    if not k > 0:
        raise NotANorm(f"{norm!r} vanishes on the unit sphere of the maximum")
    if norm.scale == k:
        return norm
    logger.debug(f"Standardizing {norm.kind} by {k}")
    return NormSpec(
        norm.kind,
        norm.params,
        scale=k,
        simplex=norm._simplex,
    )


def tau(norm: NormSpec, z):
    """``z / nu(z, 1 - z)``, zero at the origin."""
    z = np.asarray(z, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(z > 0, z / norm(z, 1.0 - z), 0.0)[()]


def gap(norm: NormSpec, z):
    """``1 - tau(z)``, without cancellation near the contact with 1."""
    z = np.asarray(z, dtype=float)
    w = 1.0 - z
    k = norm.scale
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if norm.kind == "lp":
            p = norm.params["p"]
            s = np.where(z > 0, w / np.where(z > 0, z, 1.0), np.inf)
            out = -np.expm1(-np.log1p(s**p) / p)
        elif norm.kind == "linf":
            out = np.where(z >= 0.5, 0.0, (w - z) / w)
        elif norm.kind == "theta_mix":
            theta = norm.params["theta"]
            # excess = nu_raw - k z
            if theta >= 1:
                excess = np.where(z >= 0.5, (theta - 1.0) * (z - w), theta * (w - z))
            else:
                excess = np.where(
                    z >= 0.5, (1.0 - theta) * w, theta * w + (1.0 - 2.0 * theta) * z
                )
            out = excess / (excess + k * z)
        elif norm.kind == "mahalanobis":
            rho = norm.params["rho"]
            nu = norm(z, w)
            num = (w - rho * z) ** 2 / (1.0 - rho * rho)
            out = num / (nu * (nu + z))
        else:
            nu = norm(z, w)
            out = (nu - z) / nu
        return np.where(z > 0, np.maximum(out, 0.0), 1.0)[()]


@dataclass(frozen=True)
class NormProfile:
    """What the coefficient rules need from a norm.

    Attributes
    ----------
    zeta : float
        ``tau(1/2)``.
    b1, b2 : float
        Ends of the interval where ``tau = 1``, with ``1/2 <= b1 <= b2 <= 1``.
    gamma1 : float
        Index of the contact left of ``b1``, ``1 - tau(b1 - s) ~ s^(1/gamma1)``.
    gamma2 : Optional[float]
        Index of the contact right of ``b2``, ``None`` when ``b2 = 1``.
    dtau1_left : Optional[float]
        Derivative at 1/2 of the increasing piece of ``tau`` when
        ``b1 = b2 = 1/2``.
    dtau2_right : Optional[float]
        Derivative at 1/2 of the decreasing piece of ``tau`` when
        ``b1 = b2 = 1/2``.
    flags : Tuple[str, ...]
        Numerical conditions met while computing the profile.
    """

    zeta: float
    b1: float
    b2: float
    gamma1: float
    gamma2: Optional[float] = None
    dtau1_left: Optional[float] = None
    dtau2_right: Optional[float] = None
    flags: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def contact_at_half(self) -> bool:
        return self.b1 == 0.5 and self.b2 == 0.5

    def to_json(self) -> JSONDict:
        return {
            "zeta": self.zeta,
            "b1": self.b1,
            "b2": self.b2,
            "gamma1": self.gamma1,
            "gamma2": self.gamma2,
            "dtau1_left": self.dtau1_left,
            "dtau2_right": self.dtau2_right,
        }


def analytic_profile(norm: NormSpec) -> Optional[NormProfile]:
    """Closed-form profile of catalog norms, ``None`` for custom ones."""
    if norm.kind == "lp":
        p = norm.params["p"]
        return NormProfile(zeta=2.0 ** (-1.0 / p), b1=1.0, b2=1.0, gamma1=1.0 / p)
    if norm.kind == "linf":
        return NormProfile(zeta=1.0, b1=0.5, b2=1.0, gamma1=1.0)
    if norm.kind == "theta_mix":
        theta = norm.params["theta"]
        if theta > 1:
            return NormProfile(
                zeta=1.0,
                b1=0.5,
                b2=0.5,
                gamma1=1.0,
                gamma2=1.0,
                dtau1_left=4.0 * theta,
                dtau2_right=-4.0 * (theta - 1.0),
            )
        if theta == 1:
            return NormProfile(zeta=1.0, b1=0.5, b2=1.0, gamma1=1.0)
        return NormProfile(zeta=theta, b1=1.0, b2=1.0, gamma1=1.0)
    if norm.kind == "mahalanobis":
        rho = norm.params["rho"]
        if rho > 0:
            b = 1.0 / (1.0 + rho)
            return NormProfile(
                zeta=math.sqrt((1.0 + rho) / 2.0), b1=b, b2=b, gamma1=0.5, gamma2=0.5
            )
        # rho < 0: tau stays below 1 on the open arc, contact at the axes
        return NormProfile(
            zeta=math.sqrt((1.0 + rho) / 2.0),
            b1=1.0,
            b2=1.0,
            gamma1=0.5 if rho == 0 else 1.0,
            flags=() if rho == 0 else ("contact_through_positive_part",),
        )
    return None


def profile(norm: NormSpec, tol: float = PLATEAU_TOL) -> NormProfile:
    """Profile of a standardized norm.

    Catalog norms use closed forms. Other norms are profiled numerically,
    see :func:`numeric_profile`.
    """
    analytic = analytic_profile(norm)
    if analytic is not None:
        return analytic
    if norm._profile is None or tol != PLATEAU_TOL:
        result = numeric_profile(norm, tol)
        if tol != PLATEAU_TOL:
            return result
        norm._profile = result
    return norm._profile


def _last_below(f: Callable[[float], float], good: float, bad: float, tol: float):
    """Bisection for the boundary of ``{f <= tol}`` between ``good`` and ``bad``."""
    for _ in range(200):
        mid = 0.5 * (good + bad)
        if mid in (good, bad):
            break
        if f(mid) <= tol:
            good = mid
        else:
            bad = mid
    return good


def _plateau(norm: NormSpec, z_min: float, tol: float) -> Tuple[float, float]:
    g = lambda z: float(gap(norm, z))  # noqa: E731
    b1 = 0.5 if g(0.5) <= tol else _last_below(g, z_min, 0.5, tol)
    b2 = 1.0 if g(1.0) <= tol else _last_below(g, z_min, 1.0, tol)
    return b1, b2


def _contact_index(norm: NormSpec, b: float, side: int) -> Tuple[float, bool]:
    """Index ``gamma`` of ``1 - tau(b + side s) ~ s^(1/gamma)`` by regression."""
    s = REGRESSION_GRID
    g = np.asarray(gap(norm, b + side * s), dtype=float)
    keep = g > GAP_NOISE_FLOOR
    dropped = not np.all(keep)
    if np.count_nonzero(keep) < 5:
        raise ProfileUnresolved(f"Too few resolvable gap values near {b}")
    res = stats.linregress(np.log(s[keep]), np.log(g[keep]))
    r2 = res.rvalue**2
    if r2 < REGRESSION_MIN_R2:
        raise ProfileUnresolved(
            f"Contact of tau with 1 near {b} is not regularly varying (R^2 = {r2:.6f})"
        )
    return 1.0 / res.slope, dropped


def _one_sided_derivative(f: Callable[[float], float], x: float, side: int) -> float:
    """Richardson-extrapolated one-sided first derivative."""
    d = [side * (f(x + side * h) - f(x)) / h for h in RICHARDSON_STEPS]
    r1 = [2.0 * d[1] - d[0], 2.0 * d[2] - d[1]]
    return (4.0 * r1[1] - r1[0]) / 3.0


def numeric_profile(norm: NormSpec, tol: float = PLATEAU_TOL) -> NormProfile:
    """Profile a standardized norm by bisection, regression and extrapolation.

    The plateau ``{tau = 1}`` is located by bisection at tolerances ``tol``
    and 1e-10. It is a true plateau when wider than 1e-9 and stable between
    the two tolerances, a single contact point otherwise. Contact indices
    come from log-log regression of ``1 - tau`` over distances in
    [1e-8, 1e-3], gaps below 1e-13 being dropped as rounding noise.

    Raises
    ------
    :exc:`ProfileUnresolved`
        If a regression has R^2 below 0.999.
    """
    flags = []
    grid = np.linspace(0.5, 1.0, 2001)
    gaps = np.asarray(gap(norm, grid), dtype=float)
    i = int(np.argmin(gaps))
    z_min = float(grid[i])
    if 0 < i < len(grid) - 1 and gaps[i] > 0:
        res = optimize.minimize_scalar(
            lambda z: float(gap(norm, z)),
            bounds=(grid[i - 1], grid[i + 1]),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if res.fun <= gaps[i]:
            z_min = float(res.x)
    if float(gap(norm, z_min)) > math.sqrt(tol):
        raise ProfileUnresolved(f"{norm!r} does not touch the maximum on [1/2, 1]")

    b1, b2 = _plateau(norm, z_min, tol)
    c1, c2 = _plateau(norm, z_min, PLATEAU_TOL_COARSE)
    width, coarse_width = b2 - b1, c2 - c1
    is_plateau = (
        width > PLATEAU_MIN_WIDTH and width > PLATEAU_WIDTH_RATIO * coarse_width
    )
    if not is_plateau:
        if width > PLATEAU_MIN_WIDTH:
            flags.append("smooth_contact")
            logger.debug(
                f"Plateau of width {width:.3g} shrinks with the tolerance, "
                f"treated as a contact point at {z_min}"
            )
        for b in (0.5, 1.0):
            if abs(z_min - b) <= PLATEAU_MIN_WIDTH:
                z_min = b
        b1 = b2 = z_min

    gamma1, dropped = _contact_index(norm, b1, -1)
    gamma2 = None
    if b2 < 1.0:
        gamma2, dropped2 = _contact_index(norm, b2, +1)
        dropped = dropped or dropped2
    if dropped:
        flags.append("gap_noise_dropped")

    dtau1 = dtau2 = None
    if b1 == 0.5 and b2 == 0.5:
        t = lambda z: -float(gap(norm, z))  # noqa: E731
        dtau1 = _one_sided_derivative(t, 0.5, -1)
        dtau2 = _one_sided_derivative(t, 0.5, +1)

    result = NormProfile(
        zeta=float(tau(norm, 0.5)),
        b1=b1,
        b2=b2,
        gamma1=gamma1,
        gamma2=gamma2,
        dtau1_left=dtau1,
        dtau2_right=dtau2,
        flags=tuple(flags),
    )
    logger.info(f"Profile of {norm!r}: {result}")
    return result


def superlevel_interval(norm: NormSpec, u: float) -> Optional[Tuple[float, float]]:
    """The interval ``{z : 1 - tau(z) <= u}``, ``None`` when empty.

    ``tau`` is quasi-concave, so superlevel sets are intervals. Working with
    ``u = 1 - x`` keeps thresholds ``x`` close to 1 accurate.
    """
    if u < 0:
        return None
    if u >= 1:
        return 0.0, 1.0
    prof = profile(norm)
    g = lambda z: float(gap(norm, z)) - u  # noqa: E731
    if u == 0 or g(prof.b1) > 0 or g(prof.b2) > 0:
        return prof.b1, prof.b2

    def root(a: float, b: float) -> float:
        return optimize.brentq(g, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps)

    lo = 0.0 if g(0.0) <= 0 else root(0.0, prof.b1)
    hi = 1.0 if g(1.0) <= 0 else root(prof.b2, 1.0)
    return lo, hi

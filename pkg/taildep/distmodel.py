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

"""Univariate laws used as radial and angular ingredients.

Catalog families are backed by frozen :mod:`scipy.stats` distributions.
Radial laws of Archimedean generators and the logistic angular law are
:class:`scipy.stats.rv_continuous` subclasses. Quantiles without a closed
form are found by vectorized bisection on the survival function.
"""

import logging
import math
import warnings
from copy import copy
from dataclasses import replace
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from scipy import integrate, special, stats

from .exceptions import InvalidGenerator, InvalidParams, NonConvergent
from .tailclass import (
    NegWeibull,
    RegVarInf,
    TailClass,
    WeibullType,
    LogWeibullType,
    as_reg_var,
    classify_parametric,
    primary_class,
)
from .utils import JSONDict
from .validation import families_template, validate_params

logger = logging.getLogger(__name__)

ArrayLike = np.ndarray
Generator = Callable[[np.ndarray], np.ndarray]

MOMENT_RTOL = 1e-8
_MAX_BISECTIONS = 1100
_MAX_DOUBLINGS = 2100


def bisect_survival(
    sf: Callable[[np.ndarray], np.ndarray],
    p: ArrayLike,
    *,
    lower: float = 0.0,
    upper: float = math.inf,
) -> np.ndarray:
    """Invert a survival function by bracketed bisection.

    Brackets for unbounded supports grow geometrically from ``max(1, lower)``.
    Bisection is geometric once both ends are positive.

    Parameters
    ----------
    sf : Callable
        Vectorized, nonincreasing survival function.
    p : ArrayLike
        Survival probabilities in (0, 1].
    lower, upper : float
        Support of the law.

    Returns
    -------
    x : np.ndarray
        Points with ``sf(x) == p`` up to the resolution of doubles.

    Raises
    ------
    :exc:`NonConvergent`
        If no upper bracket is found.
    """
    p = np.asarray(p, dtype=float)
    lo = np.full_like(p, lower)
    if math.isfinite(upper):
        hi = np.full_like(p, upper)
    else:
        hi = np.full_like(p, max(1.0, lower))
        for _ in range(_MAX_DOUBLINGS):
            above = sf(hi) > p
            if not np.any(above):
                break
            lo = np.where(above, hi, lo)
            hi = np.where(above, 2.0 * hi, hi)
        else:
            raise NonConvergent("Could not bracket the quantile")

    for _ in range(_MAX_BISECTIONS):
        mid = np.where(lo > 0, np.sqrt(lo * hi), 0.5 * (lo + hi))
        above = sf(mid) > p
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
        if np.all(hi - lo <= 4 * np.finfo(float).eps * hi):
            break

    return 0.5 * (lo + hi)


class GeneratorRadial(stats.rv_continuous):
    """Radial law of a bivariate Archimedean generator ``psi``.

    The survival function is ``psi(r) - r psi'(r)`` on ``(0, inf)``. The
    density is ``r psi''(r)``, taken from ``d2psi`` when given and by central
    differences of the survival function otherwise.
    """

    def __init__(
        self,
        psi: Generator,
        dpsi: Generator,
        d2psi: Optional[Generator] = None,
        *,
        name: str = "generator",
    ):
        super().__init__(a=0.0, name=name)
        self.psi = psi
        self.dpsi = dpsi
        self.d2psi = d2psi

    def _sf(self, r):
        return self.psi(r) - r * self.dpsi(r)

    def _cdf(self, r):
        return 1.0 - self._sf(r)

    def _pdf(self, r):
        if self.d2psi is not None:
            return r * self.d2psi(r)
        h = 1e-6 * np.maximum(r, 1e-3)
        return (self._sf(np.maximum(r - h, 0.0)) - self._sf(r + h)) / (
            r + h - np.maximum(r - h, 0.0)
        )

    def _isf(self, q):
        return bisect_survival(self._sf, q)

    def _ppf(self, q):
        return bisect_survival(self._sf, 1.0 - q)


class LogisticSpectral(stats.rv_continuous):
    """Angular law of the bivariate logistic max-stable model.

    With ``a = 1/theta`` and ``S(w) = w^a + (1 - w)^a``, the distribution
    function is ``(1 + (w^(a-1) - (1-w)^(a-1)) S^(theta-1)) / 2`` and the
    density ``(a - 1) (w (1 - w))^(a-2) S^(theta-2) / 2``. The law is
    symmetric about 1/2.
    """

    def __init__(self, theta: float):
        super().__init__(a=0.0, b=1.0, name="logistic_spectral")
        self.theta = theta

    def _s(self, w):
        a = 1.0 / self.theta
        return w**a + (1.0 - w) ** a

    def _cdf(self, w):
        a = 1.0 / self.theta
        d = w ** (a - 1.0) - (1.0 - w) ** (a - 1.0)
        return 0.5 * (1.0 + d * self._s(w) ** (self.theta - 1.0))

    def _sf(self, w):
        return self._cdf(1.0 - w)

    def _pdf(self, w):
        a = 1.0 / self.theta
        return (
            0.5
            * (a - 1.0)
            * (w * (1.0 - w)) ** (a - 2.0)
            * self._s(w) ** (self.theta - 2.0)
        )

    def _isf(self, q):
        return bisect_survival(self._sf, q, lower=0.0, upper=1.0)

    def _ppf(self, q):
        return 1.0 - self._isf(q)


def _gumbel_generator(theta: float) -> GeneratorRadial:
    def psi(x):
        return np.exp(-(x**theta))

    def dpsi(x):
        return -theta * x ** (theta - 1.0) * np.exp(-(x**theta))

    def d2psi(x):
        t = x**theta
        return theta * x ** (theta - 2.0) * np.exp(-t) * (theta * t - theta + 1.0)

    return GeneratorRadial(psi, dpsi, d2psi, name="gumbel_generator")


def _clayton_generator(theta: float) -> GeneratorRadial:
    k = 1.0 / theta

    def psi(x):
        return (1.0 + x) ** (-k)

    def dpsi(x):
        return -k * (1.0 + x) ** (-k - 1.0)

    def d2psi(x):
        return k * (k + 1.0) * (1.0 + x) ** (-k - 2.0)

    return GeneratorRadial(psi, dpsi, d2psi, name="clayton_generator")


_SCIPY = {
    "normal": lambda p: stats.norm(loc=p["loc"], scale=p["scl"]),
    "lognormal": lambda p: stats.lognorm(s=p["scl"], scale=math.exp(p["loc"])),
    "exponential": lambda p: stats.expon(scale=1.0 / p["rate"]),
    "gamma": lambda p: stats.gamma(a=p["shp"], scale=p["scl"]),
    "inverse_normal": lambda p: stats.invgauss(mu=p["mean"] / p["shp"], scale=p["shp"]),
    "logistic": lambda p: stats.logistic(loc=p["loc"], scale=p["scl"]),
    "loglogistic": lambda p: stats.fisk(c=p["shp"], scale=p["scl"]),
    "gumbel": lambda p: stats.gumbel_r(loc=p["loc"], scale=p["scl"]),
    "weibull": lambda p: stats.weibull_min(c=p["shp"], scale=p["scl"]),
    "t": lambda p: stats.t(df=p["shp"], scale=p["scl"]),
    "pareto": lambda p: stats.pareto(b=p["shp"], scale=p["scl"]),
    "frechet": lambda p: stats.invweibull(c=p["shp"], scale=p["scl"]),
    "stable": lambda p: stats.levy_stable(
        alpha=p["shp"], beta=p["skw"], loc=p["loc"], scale=p["scl"]
    ),
    "f": lambda p: stats.f(dfn=p["shp1"], dfd=p["shp2"]),
    "uniform": lambda p: stats.uniform(loc=p["loc"], scale=p["scl"]),
    "beta": lambda p: stats.beta(p["shp1"], p["shp2"]),
    "triangular": lambda p: stats.triang(
        c=(p["mode"] - p["lower"]) / (p["upper"] - p["lower"]),
        loc=p["lower"],
        scale=p["upper"] - p["lower"],
    ),
    "gev": lambda p: stats.genextreme(c=-p["shp"], loc=p["loc"], scale=p["scl"]),
    "genpareto": lambda p: stats.genpareto(c=p["shp"], loc=p["loc"], scale=p["scl"]),
    "gompertz": lambda p: stats.gompertz(c=p["shp"], scale=p["scl"]),
    "gumbel_generator": lambda p: _gumbel_generator(p["theta"]),
    "clayton_generator": lambda p: _clayton_generator(p["theta"]),
    "logistic_spectral": lambda p: LogisticSpectral(p["theta"]),
}

_G = special.gamma


def _ratio_or_inf(f: Callable[[], float], finite: bool) -> float:
    return f() if finite else math.inf


_CLOSED_MOMENTS = {
    "exponential": lambda q, p: _G(1.0 + q) / p["rate"] ** q,
    "gamma": lambda q, p: p["scl"] ** q
    * math.exp(special.gammaln(p["shp"] + q) - special.gammaln(p["shp"])),
    "weibull": lambda q, p: p["scl"] ** q * _G(1.0 + q / p["shp"]),
    "lognormal": lambda q, p: math.exp(q * p["loc"] + 0.5 * (q * p["scl"]) ** 2),
    "pareto": lambda q, p: _ratio_or_inf(
        lambda: p["shp"] * p["scl"] ** q / (p["shp"] - q), q < p["shp"]
    ),
    "frechet": lambda q, p: _ratio_or_inf(
        lambda: p["scl"] ** q * _G(1.0 - q / p["shp"]), q < p["shp"]
    ),
    "beta": lambda q, p: math.exp(
        special.betaln(p["shp1"] + q, p["shp2"]) - special.betaln(p["shp1"], p["shp2"])
    ),
    "uniform": lambda q, p: (
        ((p["loc"] + p["scl"]) ** (q + 1) - p["loc"] ** (q + 1)) / ((q + 1) * p["scl"])
    ),
}  # type: Dict[str, Callable[[float, JSONDict], float]]


class UnivariateModel:
    """A univariate law: a catalog family with validated parameters.

    Parameters
    ----------
    family : str
        Catalog name.
    params : JSONDict
        Parameters, missing ones take their defaults.

    Raises
    ------
    :exc:`UnknownFamily`
    :exc:`InvalidParams`
    """

    def __init__(self, family: str, params: Optional[JSONDict] = None):
        self.family = family
        self.params = validate_params(
            family, params or {}, template=families_template()
        )
        self._atom = self.params["value"] if family == "degenerate" else None
        self._dist = None if self._atom is not None else _SCIPY[family](self.params)
        self._classes = None  # type: Optional[Tuple[TailClass, ...]]
        # P(X > 0) for laws conditioned to be positive, 1 otherwise
        self._mass = 1.0

    @classmethod
    def from_distribution(
        cls,
        dist,
        *,
        family: str,
        params: Optional[JSONDict] = None,
        classes: Tuple[TailClass, ...] = (),
    ) -> "UnivariateModel":
        """Wrap a :mod:`scipy.stats` distribution outside the catalog."""
        model = cls.__new__(cls)
        model.family = family
        model.params = dict(params or {})
        model._atom = None
        model._dist = dist
        model._classes = tuple(classes)
        model._mass = 1.0
        return model

    def __repr__(self) -> str:
        cond = ", conditioned positive" if self._mass < 1.0 else ""
        return f"UnivariateModel({self.family!r}, {self.params!r}{cond})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UnivariateModel)
            and self.family == other.family
            and self.params == other.params
            and self._mass == other._mass
        )

    def __hash__(self) -> int:
        return hash((self.family, tuple(sorted(self.params.items())), self._mass))

    def to_json(self) -> JSONDict:
        return {"family": self.family, "params": dict(self.params)}

    @property
    def is_degenerate(self) -> bool:
        return self._atom is not None

    @property
    def is_conditioned(self) -> bool:
        return self._mass < 1.0

    def support(self) -> Tuple[float, float]:
        if self._atom is not None:
            return self._atom, self._atom
        lo, hi = (float(x) for x in self._dist.support())
        if self._mass < 1.0:
            lo = max(lo, 0.0)
        return lo, hi

    def endpoint(self) -> float:
        """Upper endpoint of the support, possibly infinite."""
        return self.support()[1]

    def conditioned_positive(self) -> "UnivariateModel":
        """The law conditioned on ``(0, inf)``, ``self`` if already positive.

        Raises
        ------
        :exc:`InvalidParams`
            If the law puts no mass on the positive half-line.
        """
        if self.support()[0] >= 0:
            return self
        mass = float(self._dist.sf(0.0))
        if not mass > 0:
            raise InvalidParams(f"{self!r} has no mass on (0, inf)")
        logger.info(f"Conditioning {self.family} to (0, inf), P(X > 0) = {mass}")
        conditioned = copy(self)
        conditioned._mass = mass
        conditioned._classes = None
        return conditioned

    def survival(self, x):
        """``P(X > x)``."""
        x = np.asarray(x, dtype=float)
        if self._atom is not None:
            return np.where(x < self._atom, 1.0, 0.0)[()]
        if self._mass < 1.0:
            tail = self._dist.sf(np.maximum(x, 0.0)) / self._mass
            return np.where(x <= 0, 1.0, tail)[()]
        return self._dist.sf(x)

    def logsf(self, x):
        x = np.asarray(x, dtype=float)
        if self._atom is not None or self._mass < 1.0:
            with np.errstate(divide="ignore"):
                return np.log(self.survival(x))
        return self._dist.logsf(x)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        if self._atom is not None:
            return np.where(x < self._atom, 0.0, 1.0)[()]
        if self._mass < 1.0:
            below = self._dist.cdf(0.0)
            return np.where(
                x <= 0, 0.0, (self._dist.cdf(np.maximum(x, 0.0)) - below) / self._mass
            )[()]
        return self._dist.cdf(x)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        if self._atom is not None:
            raise InvalidParams("A point mass has no density")
        if self._mass < 1.0:
            return np.where(x <= 0, 0.0, self._dist.pdf(x) / self._mass)[()]
        return self._dist.pdf(x)

    def hazard(self, x):
        """``pdf / survival``, the reciprocal auxiliary function of Gumbel tails."""
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.pdf(x) / self.survival(x)

    def isf(self, p):
        """Inverse survival function."""
        p = np.asarray(p, dtype=float)
        if self._atom is not None:
            return np.full_like(p, self._atom)[()]
        return self._dist.isf(p * self._mass)

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        if self._atom is not None:
            return np.full_like(q, self._atom)[()]
        if self._mass < 1.0:
            return self.isf(1.0 - q)
        return self._dist.ppf(q)

    def median(self) -> float:
        return float(self.isf(0.5))

    def sample(self, rng: np.random.Generator, size=None):
        """Draws by inversion of the survival function."""
        return self.isf(1.0 - rng.random(size))

    def tail_classes(self) -> Tuple[TailClass, ...]:
        if self._classes is None:
            classes = classify_parametric(self.family, self.params)
            if self._mass < 1.0:
                classes = tuple(_rescale_ell(c, 1.0 / self._mass) for c in classes)
            self._classes = classes
        return self._classes

    def tail_class(self) -> Optional[TailClass]:
        """The most informative tail class, ``None`` for point masses."""
        return primary_class(self.tail_classes())

    def moment(self, p: float) -> float:
        """``E[X^p]`` for ``X >= 0``, see :func:`moment`."""
        return moment(self, p)


def _rescale_ell(c: TailClass, factor: float) -> TailClass:
    if isinstance(c, (WeibullType, LogWeibullType, NegWeibull)) and c.ell_limit:
        return replace(c, ell_limit=c.ell_limit * factor)
    return c


def _moment_diverges(model: UnivariateModel, p: float) -> bool:
    for c in model.tail_classes():
        rv = as_reg_var(c)
        if rv is not None and rv.alpha <= p:
            return True
    return False


def _quad(f: Callable[[float], float], a: float, b: float, **kwargs) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        result = integrate.quad(
            f, a, b, epsabs=0.0, epsrel=MOMENT_RTOL, limit=200, full_output=1, **kwargs
        )
    if len(result) > 3:
        raise NonConvergent(f"Quadrature on [{a}, {b}] failed: {result[3]}")
    return float(result[0])


def moment(model: UnivariateModel, p: float) -> float:
    """Fractional moment ``E[X^p]`` of a positive law.

    Closed forms are used where available. Otherwise ``p x^(p-1) P(X > x)``
    is integrated over the support, split at the median. Moments beyond the
    tail index of a regularly varying law are ``inf``.

    Raises
    ------
    :exc:`InvalidParams`
        For negative ``p`` or laws with mass below zero.
    :exc:`NonConvergent`
        If quadrature misses the relative tolerance 1e-8.
    """
    if p < 0:
        raise InvalidParams(f"Moment order must be nonnegative, got {p}")
    if p == 0:
        return 1.0
    if model.is_degenerate:
        return float(model.support()[0] ** p)
    lo, hi = model.support()
    if lo < 0:
        raise InvalidParams(f"{model!r} is not a positive law")
    if not model.is_conditioned and model.family in _CLOSED_MOMENTS:
        return float(_CLOSED_MOMENTS[model.family](p, model.params))
    if _moment_diverges(model, p):
        return math.inf

    return survival_moment(model.survival, p, lower=lo, upper=hi, split=model.median())


def survival_moment(
    sf: Callable[[float], float],
    p: float,
    *,
    lower: float,
    upper: float,
    split: float,
) -> float:
    """``lower^p + int_lower^upper p x^(p-1) sf(x) dx``, split at ``split``.

    Raises
    ------
    :exc:`NonConvergent`
    """
    total = lower**p
    if p < 1 and lower == 0:
        # integrable singularity of x^(p-1) at the origin
        total += _quad(
            lambda x: p * float(sf(x)), 0.0, split, weight="alg", wvar=(p - 1.0, 0.0)
        )
    else:
        total += _quad(lambda x: p * x ** (p - 1) * float(sf(x)), lower, split)
    if split < upper:
        total += _quad(lambda x: p * x ** (p - 1) * float(sf(x)), split, upper)
    return total


def radial_from_generator(
    psi: Generator,
    psi_right_derivative: Generator,
    *,
    psi_second_derivative: Optional[Generator] = None,
    classes: Tuple[TailClass, ...] = (),
    name: str = "generator",
) -> UnivariateModel:
    """Radial law ``P(R > r) = psi(r) - r psi'(r+)`` of an Archimedean generator.

    Parameters
    ----------
    psi, psi_right_derivative : Callable
        The generator and its right derivative, both accepting arrays.
    psi_second_derivative : Optional[Callable]
        Used for the density when given.
    classes : Tuple[TailClass, ...]
        Tail classes of the radial law, when known.
    name : str

    Raises
    ------
    :exc:`InvalidGenerator`
        If the generator is not normalized, its derivative disagrees with
        finite differences, or the induced survival leaves [0, 1] or
        increases on the probe grid.
    """
    r = np.concatenate(([0.0], np.geomspace(1e-6, 1e6, 241)))
    with np.errstate(all="ignore"):
        values = np.asarray(psi(r), dtype=float)
        if not abs(values[0] - 1.0) <= 1e-12:
            raise InvalidGenerator(f"psi(0) = {values[0]}, expected 1")
        if np.any(np.diff(values) > 1e-12):
            raise InvalidGenerator("psi increases on the probe grid")

        probe = r[1:]
        h = 1e-6 * probe
        fd = (np.asarray(psi(probe + h)) - np.asarray(psi(probe - h))) / (2 * h)
        d = np.asarray(psi_right_derivative(probe), dtype=float)
        if not np.allclose(d, fd, rtol=1e-4, atol=1e-8):
            raise InvalidGenerator("psi' disagrees with finite differences of psi")

        sf = values - r * np.asarray(psi_right_derivative(r), dtype=float)
    if not np.all(np.isfinite(sf[1:])) or np.any(sf < -1e-12) or np.any(sf > 1 + 1e-12):
        raise InvalidGenerator("Induced radial survival leaves [0, 1]")
    if np.any(np.diff(sf[1:]) > 1e-12):
        raise InvalidGenerator("Induced radial survival is not monotone")

    dist = GeneratorRadial(psi, psi_right_derivative, psi_second_derivative, name=name)
    logger.debug(f"Radial law from generator {name}")
    return UnivariateModel.from_distribution(dist, family=name, classes=classes)


def is_regularly_varying(model: UnivariateModel) -> Optional[RegVarInf]:
    """The regularly varying class of a law, if it has one."""
    for c in model.tail_classes():
        rv = as_reg_var(c)
        if rv is not None:
            return rv
    return None

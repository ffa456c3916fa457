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

"""Laws of the angular pair ``(W1, W2)``, with common margins."""

import abc
import logging
import math
import warnings
from typing import Optional, Tuple

import numpy as np
from scipy import integrate, stats

from .distmodel import UnivariateModel, survival_moment
from .exceptions import InvalidSpec, NonConvergent
from .normgeom import NormSpec, make_norm, profile, superlevel_interval, tau
from .utils import JSONDict

logger = logging.getLogger(__name__)

SYMMETRIC_Z_FAMILIES = ("beta", "uniform", "logistic_spectral")


class AngularModel(abc.ABC):
    """A pair ``(W1, W2)`` of nonnegative variables with a common margin."""

    kind = ""  # type: str

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_json()!r})"

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash(repr(self))

    @abc.abstractmethod
    def to_json(self) -> JSONDict:
        pass

    @abc.abstractmethod
    def margin_survival(self, x):
        """``P(W > x)``."""

    @abc.abstractmethod
    def joint_survival(self, x1, x2):
        """``P(W1 > x1, W2 > x2)``."""

    @abc.abstractmethod
    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """An array of shape ``(size, 2)``."""

    @abc.abstractmethod
    def endpoint(self) -> float:
        """Upper endpoint of the margin."""

    def min_endpoint(self) -> float:
        """Upper endpoint of ``min(W1, W2)``."""
        return self.endpoint()

    def min_survival(self, x):
        """``P(min(W1, W2) > x)``."""
        return self.joint_survival(x, x)

    def positive_mass(self) -> float:
        """``P(W > 0)``."""
        return float(self.margin_survival(0.0))

    def _median(self) -> float:
        return 0.5 * self.endpoint() if math.isfinite(self.endpoint()) else 1.0

    def margin_moment(self, p: float) -> float:
        """``E(W^p)``."""
        return survival_moment(
            self.margin_survival,
            p,
            lower=0.0,
            upper=self.endpoint(),
            split=self._median(),
        )

    def min_moment(self, p: float) -> float:
        """``E(min(W1, W2)^p)``."""
        upper = self.min_endpoint()
        return survival_moment(
            self.min_survival,
            p,
            lower=0.0,
            upper=upper,
            split=min(self._median(), 0.5 * upper),
        )

    def breakpoints(self) -> Tuple[float, ...]:
        """Points where survival functions of the pair are not smooth."""
        return tuple(
            sorted(
                {x for x in (self.min_endpoint(), self.endpoint()) if math.isfinite(x)}
            )
        )

    def swapped(self) -> "AngularModel":
        """The pair ``(W2, W1)``."""
        return SwappedPair(self)


class ConstrainedSphere(AngularModel):
    """``(tau(Z), tau(1 - Z))`` on the unit sphere of a standardized norm.

    Parameters
    ----------
    norm : NormSpec
        A standardized norm.
    z : UnivariateModel
        Law of ``Z = W1 / (W1 + W2)`` on [0, 1], symmetric about 1/2.

    Raises
    ------
    :exc:`InvalidSpec`
        If the law of ``Z`` is not a symmetric law on [0, 1], or for a
        Mahalanobis norm with ``rho < 0``, whose sphere reaches the maximum
        only through positive parts off the quadrant.
    """

    kind = "constrained_sphere"

    def __init__(self, norm: NormSpec, z: UnivariateModel):
        if norm.kind == "mahalanobis" and norm.params["rho"] < 0:
            raise InvalidSpec(
                "A Mahalanobis sphere with rho < 0 leaves the quadrant, "
                f"got rho = {norm.params['rho']}"
            )
        if z.family not in SYMMETRIC_Z_FAMILIES:
            raise InvalidSpec(
                f"Z must be one of {', '.join(SYMMETRIC_Z_FAMILIES)}, got {z.family}"
            )
        if z.support() != (0.0, 1.0):
            raise InvalidSpec(f"Z must be supported on [0, 1], got {z.support()}")
        if z.family == "beta" and z.params["shp1"] != z.params["shp2"]:
            raise InvalidSpec("A beta law for Z must have equal shapes")
        self.norm = norm
        self.z = z

    def to_json(self) -> JSONDict:
        return {"kind": self.kind, "norm": self.norm.to_json(), "z": self.z.to_json()}

    def endpoint(self) -> float:
        return 1.0

    def min_endpoint(self) -> float:
        return profile(self.norm).zeta

    def _median(self) -> float:
        return 0.5

    def _prob_between(self, a: float, b: float) -> float:
        if b <= a:
            return 0.0
        if a >= 0.5:
            return float(self.z.survival(a) - self.z.survival(b))
        return float(self.z.cdf(b) - self.z.cdf(a))

    def _interval(self, x: float) -> Optional[Tuple[float, float]]:
        if x <= 0:
            return 0.0, 1.0
        return superlevel_interval(self.norm, 1.0 - x)

    def _joint(self, x1: float, x2: float) -> float:
        s1, s2 = self._interval(x1), self._interval(x2)
        if s1 is None or s2 is None:
            return 0.0
        return self._prob_between(max(s1[0], 1.0 - s2[1]), min(s1[1], 1.0 - s2[0]))

    def margin_survival(self, x):
        return np.vectorize(lambda t: self._joint(t, 0.0), otypes=[float])(x)[()]

    def joint_survival(self, x1, x2):
        return np.vectorize(self._joint, otypes=[float])(x1, x2)[()]

    def atom_at_one(self) -> float:
        """``P(W = 1)``, the mass of ``Z`` on the plateau of ``tau``."""
        prof = profile(self.norm)
        return self._prob_between(prof.b1, prof.b2)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        z = np.asarray(self.z.sample(rng, size), dtype=float)
        return np.column_stack((tau(self.norm, z), tau(self.norm, 1.0 - z)))


class _CommonMargin(AngularModel):
    def __init__(self, margin: UnivariateModel):
        self.margin = margin.conditioned_positive()

    def to_json(self) -> JSONDict:
        return {"kind": self.kind, "margin": self.margin.to_json()}

    def endpoint(self) -> float:
        return self.margin.endpoint()

    def _median(self) -> float:
        return self.margin.median()

    def margin_survival(self, x):
        return self.margin.survival(x)

    def margin_moment(self, p: float) -> float:
        return self.margin.moment(p)


class IndependentPair(_CommonMargin):
    """Independent ``W1, W2`` with a common law."""

    kind = "independent"

    def joint_survival(self, x1, x2):
        return self.margin.survival(x1) * self.margin.survival(x2)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.asarray(self.margin.sample(rng, (size, 2)), dtype=float)


class ComonotonePair(_CommonMargin):
    """``W1 = W2``."""

    kind = "comonotone"

    def joint_survival(self, x1, x2):
        return self.margin.survival(np.maximum(x1, x2))

    def min_moment(self, p: float) -> float:
        return self.margin_moment(p)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        w = np.asarray(self.margin.sample(rng, size), dtype=float)
        return np.column_stack((w, w))


def gaussian_upper_orthant(c1: float, c2: float, rho: float) -> float:
    """``P(N1 > c1, N2 > c2)`` for standard normals with correlation ``rho``.

    Computed as ``int_c^inf phi(u) Q((c' - rho u) / sqrt(1 - rho^2)) du`` over
    the larger threshold ``c``, to relative tolerance 1e-10.

    Raises
    ------
    :exc:`NonConvergent`
    """
    c1, c2 = max(c1, c2), min(c1, c2)
    if rho == 1.0 or c2 == math.inf:
        return float(stats.norm.sf(c1))
    if c1 == -math.inf:
        return 1.0
    if c1 == math.inf:
        return 0.0
    s = math.sqrt(1.0 - rho * rho)

    def integrand(u: float) -> float:
        return float(stats.norm.pdf(u) * stats.norm.sf((c2 - rho * u) / s))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        result = integrate.quad(
            integrand,
            c1,
            max(c1, 0.0) + 40.0,
            epsabs=0.0,
            epsrel=1e-10,
            limit=200,
            full_output=1,
        )
    if len(result) > 3 and result[0] > 0 and result[1] > 1e-6 * result[0]:
        raise NonConvergent(
            f"Gaussian orthant probability at ({c1}, {c2}): {result[3]}"
        )
    return float(result[0])


class GaussianCopulaPair(_CommonMargin):
    """A pair with a Gaussian copula of correlation ``rho`` in (-1, 1].

    Raises
    ------
    :exc:`InvalidSpec`
        If ``rho`` is outside (-1, 1].
    """

    kind = "gaussian_copula"

    def __init__(self, rho: float, margin: UnivariateModel):
        if not -1.0 < rho <= 1.0:
            raise InvalidSpec(
                f"The Gaussian correlation must lie in (-1, 1], got {rho}"
            )
        super().__init__(margin)
        self.rho = float(rho)

    def to_json(self) -> JSONDict:
        return {**super().to_json(), "rho": self.rho}

    def _threshold(self, x):
        return stats.norm.isf(self.margin.survival(x))

    def _joint(self, x1: float, x2: float) -> float:
        c1, c2 = float(self._threshold(x1)), float(self._threshold(x2))
        return gaussian_upper_orthant(c1, c2, self.rho)

    def joint_survival(self, x1, x2):
        return np.vectorize(self._joint, otypes=[float])(x1, x2)[()]

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        n = rng.standard_normal((size, 2))
        n[:, 1] = self.rho * n[:, 0] + math.sqrt(1.0 - self.rho**2) * n[:, 1]
        return np.asarray(self.margin.isf(stats.norm.sf(n)), dtype=float)


class SwappedPair(AngularModel):
    """``(W2, W1)`` for a pair ``(W1, W2)``."""

    kind = "swapped"

    def __init__(self, pair: AngularModel):
        self.pair = pair

    def to_json(self) -> JSONDict:
        return {"kind": self.kind, "pair": self.pair.to_json()}

    def margin_survival(self, x):
        return self.pair.margin_survival(x)

    def joint_survival(self, x1, x2):
        return self.pair.joint_survival(x2, x1)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.pair.sample(rng, size)[:, ::-1]

    def endpoint(self) -> float:
        return self.pair.endpoint()

    def min_endpoint(self) -> float:
        return self.pair.min_endpoint()

    def _median(self) -> float:
        return self.pair._median()

    def margin_moment(self, p: float) -> float:
        return self.pair.margin_moment(p)

    def breakpoints(self) -> Tuple[float, ...]:
        return self.pair.breakpoints()

    def swapped(self) -> AngularModel:
        return self.pair


def angular_from_dict(d: JSONDict) -> AngularModel:
    """Build an angular model from its JSON form.

    Raises
    ------
    :exc:`InvalidSpec`
    """
    try:
        kind = d["kind"]
        if kind == SwappedPair.kind:
            return SwappedPair(angular_from_dict(d["pair"]))
        if kind == ConstrainedSphere.kind:
            norm = dict(d["norm"])
            return ConstrainedSphere(
                make_norm(norm.pop("kind"), norm), univariate_from_dict(d["z"])
            )
        margin = univariate_from_dict(d["margin"])
    except (KeyError, TypeError) as e:
        raise InvalidSpec(f"Malformed angular model {d!r}: missing {e}") from e
    if kind == IndependentPair.kind:
        return IndependentPair(margin)
    if kind == ComonotonePair.kind:
        return ComonotonePair(margin)
    if kind == GaussianCopulaPair.kind:
        return GaussianCopulaPair(float(d.get("rho", 0.0)), margin)
    raise InvalidSpec(f"Unknown angular kind {kind!r}")


def univariate_from_dict(d: JSONDict) -> UnivariateModel:
    if not isinstance(d, dict) or "family" not in d:
        raise InvalidSpec(f"A law needs a family, got {d!r}")
    return UnivariateModel(d["family"], d.get("params") or {})

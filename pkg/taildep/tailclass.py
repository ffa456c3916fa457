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

"""Tail classes of univariate distributions.

A tail class describes how the survival function of a positive random
variable decays at its upper endpoint:

* :class:`RegVarInf`, regularly varying at infinity, ``x^-alpha (log x)^beta``;
* :class:`ExpTailed`, exponential tails ``x^beta exp(-alpha x)``;
* :class:`ConvEquiv`, convolution equivalent tails, ``alpha = 0`` meaning
  subexponential;
* :class:`WeibullType` and :class:`LogWeibullType`,
  ``ell x^gamma exp(-alpha x^beta)`` on the original and the log scale;
* :class:`NegWeibull`, power decay ``ell s^alpha`` at a finite endpoint;
* :class:`GumbelGeneric`, Gumbel domain of attraction known only abstractly;
* :class:`SuperHeavy`, variables whose logarithm is heavy tailed.

Slowly varying factors are carried only through their limit ``ell_limit``,
``None`` when the factor does not settle to a positive constant.
"""

import logging
import math
from dataclasses import dataclass, fields
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from scipy import special

from .exceptions import InvalidParams, InvalidSpec, MappingUndefined
from .utils import JSONDict
from .validation import families_template, validate_params

logger = logging.getLogger(__name__)


class Ordering(Enum):
    """Outcome of comparing the tail heaviness of two classes."""

    STRICTLY_LIGHTER = "StrictlyLighter"
    STRICTLY_HEAVIER = "StrictlyHeavier"
    SAME_SCALE = "SameScale"
    INCOMPARABLE = "Incomparable"

    def reverse(self) -> "Ordering":
        if self is Ordering.STRICTLY_LIGHTER:
            return Ordering.STRICTLY_HEAVIER
        if self is Ordering.STRICTLY_HEAVIER:
            return Ordering.STRICTLY_LIGHTER
        return self


class MDA(Enum):
    """Maximum domains of attraction."""

    FRECHET = "frechet"
    GUMBEL = "gumbel"
    NEGATIVE_WEIBULL = "negative_weibull"
    NONE = "none"


def _require(condition: bool, msg: str) -> None:
    if not condition:
        raise InvalidParams(msg)


def _finite(x: float) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x)


def _positive_or_none(x: Optional[float]) -> bool:
    return x is None or (_finite(x) and x > 0)


@dataclass(frozen=True)
class TailClass:
    """Base of all tail classes."""

    @property
    def kind(self) -> str:
        return type(self).__name__

    def to_json(self) -> JSONDict:
        d = {"kind": self.kind}  # type: JSONDict
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, TailClass):
                d[f.name] = v.to_json()
            elif isinstance(v, float) and math.isinf(v):
                d[f.name] = "inf"
            else:
                d[f.name] = v
        return d


@dataclass(frozen=True)
class RegVarInf(TailClass):
    alpha: float
    beta: float = 0.0

    def __post_init__(self) -> None:
        _require(_finite(self.alpha) and self.alpha >= 0, "RegVarInf needs alpha >= 0")
        _require(_finite(self.beta), "RegVarInf needs a finite beta")


@dataclass(frozen=True)
class ExpTailed(TailClass):
    alpha: float
    beta: float = 0.0

    def __post_init__(self) -> None:
        _require(_finite(self.alpha) and self.alpha > 0, "ExpTailed needs alpha > 0")
        _require(_finite(self.beta), "ExpTailed needs a finite beta")


@dataclass(frozen=True)
class ConvEquiv(TailClass):
    alpha: float

    def __post_init__(self) -> None:
        _require(_finite(self.alpha) and self.alpha >= 0, "ConvEquiv needs alpha >= 0")


@dataclass(frozen=True)
class _PowerExponential(TailClass):
    """Shared fields of Weibull-type tails on the original and the log scale."""

    alpha: float
    beta: float
    gamma: float = 0.0
    ell_limit: Optional[float] = None

    def __post_init__(self) -> None:
        _require(_finite(self.alpha) and self.alpha > 0, f"{self.kind} needs alpha > 0")
        _require(_finite(self.beta) and self.beta > 0, f"{self.kind} needs beta > 0")
        _require(_finite(self.gamma), f"{self.kind} needs a finite gamma")
        _require(
            _positive_or_none(self.ell_limit), f"{self.kind} needs ell_limit > 0"
        )


@dataclass(frozen=True)
class WeibullType(_PowerExponential):
    pass


@dataclass(frozen=True)
class LogWeibullType(_PowerExponential):
    pass


@dataclass(frozen=True)
class NegWeibull(TailClass):
    endpoint: float
    alpha: float
    ell_limit: Optional[float] = None

    def __post_init__(self) -> None:
        _require(
            _finite(self.endpoint) and self.endpoint > 0,
            "NegWeibull needs a finite positive endpoint",
        )
        _require(_finite(self.alpha) and self.alpha > 0, "NegWeibull needs alpha > 0")
        _require(_positive_or_none(self.ell_limit), "NegWeibull needs ell_limit > 0")


@dataclass(frozen=True)
class GumbelGeneric(TailClass):
    """Gumbel domain of attraction with an unspecified auxiliary function.

    ``log_hazard_index`` is the index of regular variation of
    ``-log survival``, when known. ``math.inf`` marks tails where
    ``-log survival`` grows exponentially, like the logarithm of an
    exponential variable.
    """

    endpoint: float = math.inf
    log_hazard_index: Optional[float] = None

    def __post_init__(self) -> None:
        _require(self.endpoint > 0, "GumbelGeneric needs a positive endpoint")
        _require(
            self.log_hazard_index is None or self.log_hazard_index > 0,
            "GumbelGeneric needs log_hazard_index > 0",
        )


@dataclass(frozen=True)
class SuperHeavy(TailClass):
    log_class: TailClass

    def __post_init__(self) -> None:
        _require(
            isinstance(self.log_class, TailClass),
            "SuperHeavy needs the tail class of the logarithm",
        )


_KINDS = {
    c.__name__: c
    for c in (
        RegVarInf,
        ExpTailed,
        ConvEquiv,
        WeibullType,
        LogWeibullType,
        NegWeibull,
        GumbelGeneric,
        SuperHeavy,
    )
}


def from_json(d: JSONDict) -> TailClass:
    """Inverse of :meth:`TailClass.to_json`.

    Raises
    ------
    :exc:`InvalidSpec`
        For unknown kinds or fields.
    """
    if not isinstance(d, dict) or d.get("kind") not in _KINDS:
        raise InvalidSpec(f"Not a tail class: {d!r}")
    cls = _KINDS[d["kind"]]
    kwargs = {}
    for k, v in d.items():
        if k == "kind":
            continue
        if k == "log_class":
            kwargs[k] = from_json(v)
        elif v == "inf":
            kwargs[k] = math.inf
        else:
            kwargs[k] = v
    try:
        return cls(**kwargs)
    except TypeError as e:
        raise InvalidSpec(f"Malformed {d['kind']}: {e}") from e


# Representation conversions.


def as_exp_tailed(c: TailClass) -> Optional[ExpTailed]:
    """``ExpTailed`` view of ``c``, if it has one.

    A Weibull-type tail of index 1 is exponential with rate ``alpha`` and
    prefactor index ``gamma``.
    """
    if isinstance(c, ExpTailed):
        return c
    if isinstance(c, WeibullType) and c.beta == 1:
        return ExpTailed(alpha=c.alpha, beta=c.gamma)
    return None


def as_weibull_type(c: TailClass) -> Optional[WeibullType]:
    if isinstance(c, WeibullType):
        return c
    if isinstance(c, ExpTailed):
        return WeibullType(alpha=c.alpha, beta=1.0, gamma=c.beta)
    return None


def as_reg_var(c: TailClass) -> Optional[RegVarInf]:
    """``RegVarInf`` view of ``c``, if it has one."""
    if isinstance(c, RegVarInf):
        return c
    if isinstance(c, LogWeibullType) and c.beta == 1:
        return RegVarInf(alpha=c.alpha, beta=c.gamma)
    return None


def as_log_weibull_type(c: TailClass) -> Optional[LogWeibullType]:
    if isinstance(c, LogWeibullType):
        return c
    if isinstance(c, RegVarInf) and c.alpha > 0:
        return LogWeibullType(alpha=c.alpha, beta=1.0, gamma=c.beta)
    return None


def log_transform(c: TailClass) -> TailClass:
    """Class of ``log X`` given the class of ``X``, and back.

    Raises
    ------
    :exc:`MappingUndefined`
        When no correspondence exists.
    """
    if isinstance(c, RegVarInf):
        if c.alpha == 0:
            raise MappingUndefined("Slowly varying tails have no exponential log")
        return ExpTailed(alpha=c.alpha, beta=c.beta)
    if isinstance(c, ExpTailed):
        return RegVarInf(alpha=c.alpha, beta=c.beta)
    if isinstance(c, LogWeibullType):
        return WeibullType(c.alpha, c.beta, c.gamma, c.ell_limit)
    if isinstance(c, WeibullType):
        return LogWeibullType(c.alpha, c.beta, c.gamma, c.ell_limit)
    if isinstance(c, SuperHeavy):
        return c.log_class
    raise MappingUndefined(f"No log-scale correspondence for {c.kind}")


def mda(c: TailClass) -> Optional[MDA]:
    """Domain of attraction implied by a class, ``None`` when undetermined."""
    if isinstance(c, NegWeibull):
        return MDA.NEGATIVE_WEIBULL
    if isinstance(c, RegVarInf):
        return MDA.FRECHET if c.alpha > 0 else MDA.NONE
    if isinstance(c, LogWeibullType):
        if c.beta == 1:
            return MDA.FRECHET
        return MDA.GUMBEL if c.beta > 1 else MDA.NONE
    if isinstance(c, (WeibullType, ExpTailed, GumbelGeneric)):
        return MDA.GUMBEL
    if isinstance(c, ConvEquiv):
        return MDA.GUMBEL if c.alpha > 0 else None
    if isinstance(c, SuperHeavy):
        return MDA.NONE
    return None


def log_hazard_index(c: TailClass) -> Optional[float]:
    """Index of regular variation of ``-log survival``.

    ``math.inf`` for exponentially growing log hazards, ``0`` for tails
    lighter than any power but heavier than any Weibull tail, ``None`` when
    unknown.
    """
    if isinstance(c, WeibullType):
        return c.beta
    if isinstance(c, ExpTailed):
        return 1.0
    if isinstance(c, LogWeibullType) and c.beta > 1:
        return 0.0
    if isinstance(c, GumbelGeneric):
        return c.log_hazard_index
    return None


# Heaviness.

_Key = Tuple[int, Tuple[Optional[float], ...]]


def _chain_key(c: TailClass) -> Optional[_Key]:
    """Position of a class along the heaviness chain.

    The level grows with heaviness. Within a level, the refinement tuple is
    compared lexicographically, larger entries being heavier, ``None``
    entries undecidable.
    """
    if isinstance(c, NegWeibull):
        return 0, (c.endpoint, -c.alpha)
    if isinstance(c, GumbelGeneric):
        if math.isfinite(c.endpoint):
            return 0, (c.endpoint, None)
        delta = c.log_hazard_index
        if delta is None:
            return None
        if math.isinf(delta):
            return 1, (None,)
        if delta > 1:
            return 2, (-delta, None)
        if delta == 1:
            return 3, (None,)
        return 4, (-delta, None)
    if isinstance(c, ConvEquiv):
        return (3, (-c.alpha, None)) if c.alpha > 0 else None
    et = as_exp_tailed(c)
    if et is not None:
        return 3, (-et.alpha, et.beta)
    if isinstance(c, WeibullType):
        level = 2 if c.beta > 1 else 4
        return level, (-c.beta, -c.alpha, c.gamma)
    rv = as_reg_var(c)
    if rv is not None:
        if rv.alpha > 0:
            return 6, (-rv.alpha, rv.beta)
        return 7, (rv.beta,)
    if isinstance(c, LogWeibullType):
        if c.beta > 1:
            return 5, (-c.beta, -c.alpha, c.gamma)
        return _chain_key(SuperHeavy(log_class=WeibullType(c.alpha, c.beta, c.gamma)))
    if isinstance(c, SuperHeavy):
        return 8, ()
    return None


def _compare_tuples(
    a: Tuple[Optional[float], ...], b: Tuple[Optional[float], ...]
) -> Ordering:
    for x, y in zip(a, b):
        if x is None or y is None:
            return Ordering.INCOMPARABLE
        if x < y:
            return Ordering.STRICTLY_LIGHTER
        if x > y:
            return Ordering.STRICTLY_HEAVIER
    return Ordering.SAME_SCALE


def _log_class_of_superheavy(c: TailClass) -> Optional[TailClass]:
    if isinstance(c, SuperHeavy):
        return c.log_class
    if isinstance(c, LogWeibullType) and c.beta < 1:
        return WeibullType(c.alpha, c.beta, c.gamma)
    return None


def dominates(a: TailClass, b: TailClass) -> Ordering:
    """Compare the tail heaviness of ``a`` against ``b``.

    Classes are ordered along the chain, lightest first,

    finite endpoints, Weibull-type with index above 1, exponential (heavier
    as the rate decreases), Weibull-type with index below 1, log-Weibull-type
    with index above 1, regularly varying (heavier as the tail index
    decreases), superheavy.

    Within a Weibull-type level a smaller index is heavier, then a smaller
    rate, then a larger power prefactor. Two superheavy classes compare
    through their logarithms.

    Returns
    -------
    ordering : Ordering
        ``STRICTLY_LIGHTER`` when ``a`` is lighter than ``b``.
    """
    if isinstance(a, GumbelGeneric) and isinstance(b, GumbelGeneric):
        return Ordering.INCOMPARABLE
    if a == b:
        return Ordering.SAME_SCALE

    log_a, log_b = _log_class_of_superheavy(a), _log_class_of_superheavy(b)
    if log_a is not None and log_b is not None:
        return dominates(log_a, log_b)

    ka, kb = _chain_key(a), _chain_key(b)
    if ka is None or kb is None:
        return Ordering.INCOMPARABLE
    if ka[0] < kb[0]:
        return Ordering.STRICTLY_LIGHTER
    if ka[0] > kb[0]:
        return Ordering.STRICTLY_HEAVIER
    return _compare_tuples(ka[1], kb[1])


# Catalog of parametric families.

_Classifier = Callable[[JSONDict], Tuple[TailClass, ...]]


def _exponential_tail(rate: float, ell: Optional[float]) -> Tuple[TailClass, ...]:
    return (
        WeibullType(alpha=rate, beta=1.0, gamma=0.0, ell_limit=ell),
        ExpTailed(alpha=rate, beta=0.0),
    )


def _power_tail(alpha: float, ell: Optional[float]) -> Tuple[TailClass, ...]:
    return (
        RegVarInf(alpha=alpha, beta=0.0),
        LogWeibullType(alpha=alpha, beta=1.0, gamma=0.0, ell_limit=ell),
    )


def _endpoint(x: float, family: str) -> float:
    if x <= 0:
        raise InvalidParams(f"The upper endpoint of {family} must be positive")
    return x


def _normal(p: JSONDict) -> Tuple[TailClass, ...]:
    s = p["scl"]
    ell = s / math.sqrt(2 * math.pi) if p["loc"] == 0 else None
    return (WeibullType(alpha=1 / (2 * s**2), beta=2.0, gamma=-1.0, ell_limit=ell),)


def _lognormal(p: JSONDict) -> Tuple[TailClass, ...]:
    s = p["scl"]
    ell = s / math.sqrt(2 * math.pi) if p["loc"] == 0 else None
    return (
        LogWeibullType(alpha=1 / (2 * s**2), beta=2.0, gamma=-1.0, ell_limit=ell),
        ConvEquiv(alpha=0.0),
    )


def _gamma(p: JSONDict) -> Tuple[TailClass, ...]:
    k, s = p["shp"], p["scl"]
    ell = math.exp(-special.gammaln(k) - (k - 1) * math.log(s))
    return (
        WeibullType(alpha=1 / s, beta=1.0, gamma=k - 1, ell_limit=ell),
        ExpTailed(alpha=1 / s, beta=k - 1),
    )


def _inverse_normal(p: JSONDict) -> Tuple[TailClass, ...]:
    mu, lam = p["mean"], p["shp"]
    rate = lam / (2 * mu**2)
    ell = math.sqrt(lam / (2 * math.pi)) * math.exp(lam / mu) / rate
    return (
        WeibullType(alpha=rate, beta=1.0, gamma=-1.5, ell_limit=ell),
        ExpTailed(alpha=rate, beta=-1.5),
        ConvEquiv(alpha=rate),
    )


def _location_scale_exponential(p: JSONDict) -> Tuple[TailClass, ...]:
    return _exponential_tail(1 / p["scl"], math.exp(p["loc"] / p["scl"]))


def _weibull(p: JSONDict) -> Tuple[TailClass, ...]:
    k, s = p["shp"], p["scl"]
    classes = [WeibullType(alpha=1 / s**k, beta=k, gamma=0.0, ell_limit=1.0)]
    if k == 1:
        classes.append(ExpTailed(alpha=1 / s, beta=0.0))
    elif k < 1:
        classes.append(ConvEquiv(alpha=0.0))
    return tuple(classes)


def _student_t(p: JSONDict) -> Tuple[TailClass, ...]:
    nu, s = p["shp"], p["scl"]
    log_k = (
        special.gammaln((nu + 1) / 2)
        - special.gammaln(nu / 2)
        - 0.5 * math.log(nu * math.pi)
    )
    return _power_tail(nu, math.exp(log_k + 0.5 * (nu - 1) * math.log(nu)) * s**nu)


def _stable(p: JSONDict) -> Tuple[TailClass, ...]:
    a, s = p["shp"], p["scl"]
    if a == 2:
        ell = s / math.sqrt(math.pi) if p["loc"] == 0 else None
        return (WeibullType(alpha=1 / (4 * s**2), beta=2.0, gamma=-1.0, ell_limit=ell),)
    if p["skw"] == -1:
        raise InvalidParams("Totally left-skewed stable laws have no heavy upper tail")
    c_a = special.gamma(a) * math.sin(math.pi * a / 2) / math.pi
    return _power_tail(a, c_a * (1 + p["skw"]) * s**a)


def _fisher(p: JSONDict) -> Tuple[TailClass, ...]:
    d1, d2 = p["shp1"], p["shp2"]
    log_ell = (
        0.5 * d2 * math.log(d2 / d1)
        - special.betaln(d1 / 2, d2 / 2)
        - math.log(d2 / 2)
    )
    return _power_tail(d2 / 2, math.exp(log_ell))


def _triangular(p: JSONDict) -> Tuple[TailClass, ...]:
    lo, m, hi = p["lower"], p["mode"], p["upper"]
    x_star = _endpoint(hi, "triangular")
    if m < hi:
        return (NegWeibull(x_star, 2.0, 1 / ((hi - lo) * (hi - m))),)
    return (NegWeibull(x_star, 1.0, 2 / (hi - lo)),)


def _generalized(p: JSONDict, family: str) -> Tuple[TailClass, ...]:
    xi, mu, s = p["shp"], p["loc"], p["scl"]
    if xi < 0:
        return (
            NegWeibull(_endpoint(mu - s / xi, family), -1 / xi, (-xi / s) ** (-1 / xi)),
        )
    if xi == 0:
        return _exponential_tail(1 / s, math.exp(mu / s))
    return _power_tail(1 / xi, (xi / s) ** (-1 / xi))


def _gumbel_generator(p: JSONDict) -> Tuple[TailClass, ...]:
    theta = p["theta"]
    classes = [WeibullType(alpha=1.0, beta=theta, gamma=theta, ell_limit=theta)]
    if theta == 1:
        classes.append(ExpTailed(alpha=1.0, beta=1.0))
    else:
        classes.append(ConvEquiv(alpha=0.0))
    return tuple(classes)


def _logistic_spectral(p: JSONDict) -> Tuple[TailClass, ...]:
    a = 1 / p["theta"] - 1
    if a < 2:
        return (NegWeibull(1.0, a, 0.5),)
    return (NegWeibull(1.0, 2.0, None),)


_CATALOG = {
    "normal": _normal,
    "lognormal": _lognormal,
    "exponential": lambda p: _exponential_tail(p["rate"], 1.0),
    "gamma": _gamma,
    "inverse_normal": _inverse_normal,
    "logistic": _location_scale_exponential,
    "loglogistic": lambda p: _power_tail(p["shp"], p["scl"] ** p["shp"]),
    "gumbel": _location_scale_exponential,
    "weibull": _weibull,
    "t": _student_t,
    "pareto": lambda p: _power_tail(p["shp"], p["scl"] ** p["shp"]),
    "frechet": lambda p: _power_tail(p["shp"], p["scl"] ** p["shp"]),
    "stable": _stable,
    "f": _fisher,
    "uniform": lambda p: (
        NegWeibull(_endpoint(p["loc"] + p["scl"], "uniform"), 1.0, 1 / p["scl"]),
    ),
    "beta": lambda p: (
        NegWeibull(
            1.0,
            p["shp2"],
            math.exp(-special.betaln(p["shp1"], p["shp2"])) / p["shp2"],
        ),
    ),
    "triangular": _triangular,
    "gev": lambda p: _generalized(p, "gev"),
    "genpareto": lambda p: _generalized(p, "genpareto"),
    "gompertz": lambda p: (GumbelGeneric(math.inf, log_hazard_index=math.inf),),
    "gumbel_generator": _gumbel_generator,
    "clayton_generator": lambda p: _power_tail(1 / p["theta"], 1 + 1 / p["theta"]),
    "logistic_spectral": _logistic_spectral,
    "degenerate": lambda p: (),
}  # type: Dict[str, _Classifier]

_PRIORITY = (
    RegVarInf,
    LogWeibullType,
    WeibullType,
    ExpTailed,
    NegWeibull,
    GumbelGeneric,
    ConvEquiv,
    SuperHeavy,
)


def catalog_families() -> Tuple[str, ...]:
    return tuple(_CATALOG)


def classify_parametric(family: str, params: JSONDict) -> Tuple[TailClass, ...]:
    """Every tail class a parametric family belongs to.

    Parameters
    ----------
    family : str
        Catalog name, see :func:`catalog_families`.
    params : JSONDict
        Parameters of the family. Missing parameters take their defaults.
        Rates are reciprocal scales.

    Returns
    -------
    classes : Tuple[TailClass, ...]
        The memberships, without repetition, most informative first. Empty
        for point masses.

    Raises
    ------
    :exc:`UnknownFamily`
    :exc:`InvalidParams`
    """
    validated = validate_params(family, params, template=families_template())
    classes = _CATALOG[family](validated)
    logger.debug(f"{family} {validated} -> {[c.kind for c in classes]}")
    return classes


def primary_class(classes: Tuple[TailClass, ...]) -> Optional[TailClass]:
    """The most informative class among memberships."""
    for kind in _PRIORITY:
        for c in classes:
            if type(c) is kind:
                return c
    return None

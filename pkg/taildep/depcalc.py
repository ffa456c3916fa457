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

"""Tail dependence coefficients of random scale constructions.

The engine matches the tail classes of the radial and angular parts against
a fixed, ordered list of rules. The first matching rule produces the upper
tail dependence coefficient ``chi`` and the residual tail dependence
coefficient ``eta``; its identifier is reported alongside. Missing
information never raises inside the rules, it yields :class:`Unknown`
naming what is missing.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Optional, Tuple, Union

import numpy as np

from .angular import (
    AngularModel,
    ComonotonePair,
    ConstrainedSphere,
    GaussianCopulaPair,
    IndependentPair,
    SwappedPair,
)
from .distmodel import (
    UnivariateModel,
    bisect_survival,
    is_regularly_varying,
    survival_moment,
)
from .exceptions import (
    InconsistentSideData,
    InvalidParams,
    InvalidSpec,
    NonConvergent,
    PreconditionViolated,
)
from .normgeom import NormProfile, profile
from .specio import ConstructionSpec
from .tailclass import (
    MDA,
    ConvEquiv,
    ExpTailed,
    GumbelGeneric,
    LogWeibullType,
    NegWeibull,
    Ordering,
    RegVarInf,
    SuperHeavy,
    TailClass,
    WeibullType,
    as_log_weibull_type,
    as_reg_var,
    as_weibull_type,
    dominates,
    log_hazard_index,
    mda,
)
from .utils import JSONDict

logger = logging.getLogger(__name__)

SIDE_DATA_TOL = 1e-9
DEFAULT_MC_BUDGET = 1_000_000
_UNIT_TOL = 1e-9
_EQ_TOL = 1e-12


# Coefficients.


@dataclass(frozen=True)
class Defined:
    value: float
    abs_err: Optional[float] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        v = float(self.value)
        if not (-_UNIT_TOL <= v <= 1.0 + _UNIT_TOL):
            raise PreconditionViolated(f"Coefficient {v} outside [0, 1]")
        object.__setattr__(self, "value", min(max(v, 0.0), 1.0))

    def to_json(self) -> JSONDict:
        d = {"status": "defined", "value": self.value}  # type: JSONDict
        if self.abs_err is not None:
            d["abs_err"] = self.abs_err
        return d


@dataclass(frozen=True)
class NotDefined:
    """The defining limit does not exist."""

    def to_json(self) -> JSONDict:
        return {"status": "not_defined"}


@dataclass(frozen=True)
class Unknown:
    """Not determined by the available information."""

    reason: str

    def to_json(self) -> JSONDict:
        return {"status": "unknown", "reason": self.reason}


Coefficient = Union[Defined, NotDefined, Unknown]

ONE = Defined(1.0)
ZERO = Defined(0.0)


def coefficient_from_json(d: JSONDict) -> Coefficient:
    status = d.get("status")
    if status == "defined":
        return Defined(d["value"], d.get("abs_err"))
    if status == "not_defined":
        return NotDefined()
    if status == "unknown":
        return Unknown(d.get("reason", ""))
    raise InvalidSpec(f"Unknown coefficient status {status!r}")


def _value(c: Coefficient) -> Optional[float]:
    return c.value if isinstance(c, Defined) else None


@dataclass(frozen=True)
class DependenceSummary:
    """``chi`` and ``eta`` of a construction, with the rule that produced them.

    Raises
    ------
    :exc:`PreconditionViolated`
        When ``chi`` is positive and ``eta`` is not 1.
    """

    chi: Coefficient
    eta: Coefficient
    rule: str
    notes: str = ""

    def __post_init__(self) -> None:
        chi = _value(self.chi)
        if chi is not None and chi > 0 and self.eta != ONE:
            raise PreconditionViolated(
                f"Rule {self.rule} gave chi = {chi} > 0 with eta = {self.eta}"
            )

    def to_json(self) -> JSONDict:
        return {
            "chi": self.chi.to_json(),
            "eta": self.eta.to_json(),
            "rule": self.rule,
            "notes": self.notes,
        }


def summary_from_json(d: JSONDict) -> DependenceSummary:
    """Read back the JSON form of :meth:`DependenceSummary.to_json`."""
    try:
        return DependenceSummary(
            coefficient_from_json(d["chi"]),
            coefficient_from_json(d["eta"]),
            d["rule"],
            d.get("notes", ""),
        )
    except (KeyError, TypeError) as e:
        raise InvalidSpec(f"Malformed dependence summary: {e}")


def _fired(
    chi: Coefficient, eta: Coefficient, rule: str, notes: str = ""
) -> DependenceSummary:
    logger.info(f"Rule {rule} fired: chi = {chi}, eta = {eta}")
    return DependenceSummary(chi, eta, rule, notes)


def _missing(what: str, rule: str) -> DependenceSummary:
    logger.info(f"Rule {rule} matched but {what} is missing")
    unknown = Unknown(f"{what} is missing")
    return DependenceSummary(unknown, unknown, rule)


# Regularly varying radius.


def chi_frechet(
    radial_alpha: float,
    angular: AngularModel,
    mc_budget: int = DEFAULT_MC_BUDGET,
    rng: Optional[np.random.Generator] = None,
) -> Coefficient:
    """``chi`` for a regularly varying radius of index ``radial_alpha``.

    ``E[min(W1^a, W2^a)] / E[W^a]``, by quadrature. Monte Carlo with
    ``mc_budget`` draws replaces quadrature when it fails to converge, and
    the estimate then carries its standard error as ``abs_err``.

    Raises
    ------
    :exc:`PreconditionViolated`
        If ``W`` has an atom at zero or ``E(W^(a + eps))`` is infinite.
    """
    if radial_alpha < 0:
        raise InvalidParams(f"Tail index must be nonnegative, got {radial_alpha}")
    if radial_alpha == 0:
        return ONE
    if angular.positive_mass() < 1.0:
        raise PreconditionViolated("P(W = 0) > 0, eta is not defined")
    margin = getattr(angular, "margin", None)
    if margin is not None:
        rv = is_regularly_varying(margin)
        if rv is not None and rv.alpha <= radial_alpha:
            raise PreconditionViolated(
                f"E(W^{radial_alpha}) is not finite beyond the tail index {rv.alpha}"
            )
    if isinstance(angular, ComonotonePair):
        return ONE

    try:
        ratio = angular.min_moment(radial_alpha) / angular.margin_moment(radial_alpha)
        return Defined(ratio)
    except NonConvergent as e:
        logger.warning(f"{e}; estimating chi by Monte Carlo with {mc_budget} draws")

    rng = np.random.default_rng() if rng is None else rng
    w = angular.sample(rng, mc_budget) ** radial_alpha
    ratios = np.min(w / w.mean(axis=0), axis=1)
    return Defined(
        float(ratios.mean()), abs_err=float(ratios.std(ddof=1) / math.sqrt(mc_budget))
    )


def _frechet_summary(
    alpha: float, angular: AngularModel, rule: str, **kwargs
) -> DependenceSummary:
    try:
        chi = chi_frechet(alpha, angular, **kwargs)
    except PreconditionViolated as e:
        return DependenceSummary(NotDefined(), NotDefined(), rule, str(e))
    notes = "Monte Carlo estimate" if chi.abs_err is not None else ""  # type: ignore
    return _fired(chi, ONE, rule, notes)


# Constrained angular pairs.


def chi_from_contact(prof: NormProfile) -> Coefficient:
    """``2|d2| / (|d1| + |d2|)`` from the one-sided slopes of ``tau`` at 1/2.

    ``d1`` and ``d2`` are the slopes of the increasing and decreasing pieces.
    """
    if prof.dtau1_left is None or prof.dtau2_right is None:
        return Unknown("one-sided derivatives of tau at 1/2")
    up, down = abs(prof.dtau1_left), abs(prof.dtau2_right)
    return Defined(2.0 * down / (down + up))


def coefficients_constrained(
    r_class: TailClass,
    prof: NormProfile,
    pw1: float,
    *,
    angular: Optional[AngularModel] = None,
    **kwargs,
) -> DependenceSummary:
    """Coefficients of ``R (W1, W2)`` with ``(W1, W2)`` on a norm sphere.

    Parameters
    ----------
    r_class : TailClass
        Tail class of the radius.
    prof : NormProfile
        Profile of the standardized norm.
    pw1 : float
        ``P(W = 1)``, the mass of the plateau of ``tau``.
    angular : Optional[AngularModel]
        The angular law, needed for regularly varying radii only.
    kwargs
        Passed to :func:`chi_frechet`.
    """
    domain = mda(r_class)
    rv = as_reg_var(r_class)

    if (rv is not None and rv.alpha == 0) or isinstance(r_class, SuperHeavy):
        return _fired(ONE, ONE, "superheavy_radial")
    if domain is MDA.FRECHET:
        if angular is None:
            return _missing("the angular law", "regularly_varying_radial")
        alpha = rv.alpha if rv is not None else r_class.alpha  # type: ignore
        return _frechet_summary(alpha, angular, "regularly_varying_radial", **kwargs)

    touching = prof.zeta >= 1.0 - _EQ_TOL
    if domain is MDA.GUMBEL:
        if not touching:
            return _fired(ZERO, _gumbel_eta(r_class, prof.zeta), "gumbel_radial.below")
        if pw1 > 0:
            return _fired(ZERO, ONE, "gumbel_radial.plateau")
        return _fired(chi_from_contact(prof), ONE, "gumbel_radial.contact")

    if domain is MDA.NEGATIVE_WEIBULL:
        alpha = r_class.alpha  # type: ignore
        if not touching:
            return _fired(ZERO, NotDefined(), "negweibull_radial.below")
        if pw1 > 0:
            return _fired(
                ZERO, Defined(alpha / (1.0 + alpha)), "negweibull_radial.plateau"
            )
        return _fired(chi_from_contact(prof), ONE, "negweibull_radial.contact")

    reason = f"no rule for a {r_class.kind} radius on a norm sphere"
    return DependenceSummary(Unknown(reason), Unknown(reason), "no_rule")


def _gumbel_eta(r_class: TailClass, zeta: float) -> Coefficient:
    if isinstance(r_class, GumbelGeneric) and math.isfinite(r_class.endpoint):
        return NotDefined()
    delta = log_hazard_index(r_class)
    if delta is None:
        return Unknown("auxiliary function unspecified")
    if math.isinf(delta):
        return ZERO
    return Defined(zeta**delta)


# Unconstrained angular pairs.


@dataclass(frozen=True)
class UnconstrainedInput:
    """Inputs of the rules for angular pairs with a common margin.

    Attributes
    ----------
    r_class, w_class, wmin_class : TailClass
        Tail classes of ``R``, ``W`` and ``min(W1, W2)``.
    chi_w, eta_w : Coefficient
        Dependence of the angular pair. ``eta_w`` is derived from the
        classes of ``W`` and ``min(W1, W2)`` when not supplied.
    tail_ratio_c : Optional[float]
        Limit of ``P(W > x) / P(R > x)``, needed when both tails are on the
        same scale.
    moments : Mapping[str, float]
        Fractional moments at the common tail index ``a``, under the keys
        ``"r_alpha"`` for ``E(R^a)``, ``"w_alpha"`` for ``E(W^a)`` and
        ``"wmin_alpha"`` for ``E(min(W1, W2)^a)``.

    Raises
    ------
    :exc:`InconsistentSideData`
    """

    r_class: TailClass
    w_class: TailClass
    wmin_class: TailClass
    chi_w: Coefficient = Unknown("chi of the angular pair not supplied")
    eta_w: Coefficient = Unknown("eta of the angular pair not supplied")
    tail_ratio_c: Optional[float] = None
    moments: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if dominates(self.wmin_class, self.w_class) is Ordering.STRICTLY_HEAVIER:
            raise InconsistentSideData(
                "min(W1, W2) cannot be heavier tailed than W: "
                f"{self.wmin_class} against {self.w_class}"
            )
        if self.tail_ratio_c is not None and not self.tail_ratio_c >= 0:
            raise InconsistentSideData(
                f"Tail ratio must be >= 0, got {self.tail_ratio_c}"
            )

        derived = derive_eta_w(self.w_class, self.wmin_class)
        if derived is None:
            return
        supplied = _value(self.eta_w)
        if supplied is None:
            object.__setattr__(self, "eta_w", Defined(derived))
        elif abs(supplied - derived) > SIDE_DATA_TOL:
            raise InconsistentSideData(
                f"eta of the angular pair was given as {supplied}, "
                f"the tail classes imply {derived}"
            )
        chi = _value(self.chi_w)
        if derived < 1.0 and chi is not None and chi > 0:
            raise InconsistentSideData(
                f"chi of the angular pair is {chi} > 0 but eta is {derived} < 1"
            )
        if derived < 1.0 and chi is None:
            object.__setattr__(self, "chi_w", ZERO)


def _lwt_view(c: TailClass) -> Optional[LogWeibullType]:
    if isinstance(c, SuperHeavy):
        wt = as_weibull_type(c.log_class)
        if wt is None:
            return None
        return LogWeibullType(wt.alpha, wt.beta, wt.gamma, wt.ell_limit)
    if isinstance(c, RegVarInf) and c.alpha == 0:
        return None
    return as_log_weibull_type(c)


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=_EQ_TOL, abs_tol=_EQ_TOL)


def derive_eta_w(w: TailClass, wmin: TailClass) -> Optional[float]:
    """``eta`` of the angular pair as the ratio of the rates of ``W`` and its
    minimum, when both tails have the same shape. ``None`` otherwise."""
    if w == wmin:
        return 1.0
    for view in (as_weibull_type, _lwt_view):
        a, b = view(w), view(wmin)
        if a is not None and b is not None:
            return a.alpha / b.alpha if _close(a.beta, b.beta) else None
    if isinstance(w, NegWeibull) and isinstance(wmin, NegWeibull):
        return w.alpha / wmin.alpha if _close(w.endpoint, wmin.endpoint) else None
    return None


def _is_superheavy(c: TailClass) -> bool:
    if isinstance(c, SuperHeavy):
        return True
    if isinstance(c, LogWeibullType):
        return c.beta < 1
    return isinstance(c, RegVarInf) and c.alpha == 0


def _log_is_subexponential(c: TailClass) -> bool:
    """Whether ``log`` of a superheavy variable is convolution equivalent of
    index 0."""
    if not isinstance(c, SuperHeavy):
        return _is_superheavy(c)
    lc = c.log_class
    if isinstance(lc, (RegVarInf, LogWeibullType, SuperHeavy)):
        return True
    if isinstance(lc, WeibullType):
        return lc.beta < 1
    return isinstance(lc, ConvEquiv) and lc.alpha == 0


def _superheavy_radial(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    r, w = inp.r_class, inp.w_class
    if not (_is_superheavy(r) and _log_is_subexponential(r)):
        return None
    rule = "superheavy_radial"
    if not _is_superheavy(w):
        c = 0.0
    else:
        order = dominates(w, r)
        if order is Ordering.STRICTLY_HEAVIER:
            return None
        if order is Ordering.STRICTLY_LIGHTER:
            c = 0.0
        elif inp.tail_ratio_c is None:
            return _missing("the tail ratio of W against R", rule)
        else:
            c = inp.tail_ratio_c
    if c == 0:
        return _fired(ONE, ONE, rule)
    chi_w = _value(inp.chi_w)
    if chi_w is None:
        return _missing("chi of the angular pair", rule)
    return _fired(Defined((1.0 + c * chi_w) / (1.0 + c)), ONE, rule)


def _log_survival_ratio(w: TailClass, r: TailClass) -> Coefficient:
    """``lim log P(W > x) / log P(R > x)`` for log-Weibull-type tails."""
    lw, lr = _lwt_view(w), _lwt_view(r)
    if lw is None or lr is None:
        return Unknown("limit of log P(W > x) / log P(R > x)")
    if _close(lw.beta, lr.beta):
        return Defined(lw.alpha / lr.alpha)
    if lw.beta < lr.beta:
        return ZERO
    return Unknown("limit of log P(W > x) / log P(R > x)")


def _superheavy_angular(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    r, w, wmin = inp.r_class, inp.w_class, inp.wmin_class
    if not (_is_superheavy(w) and _log_is_subexponential(w)):
        return None
    if _is_superheavy(r) and dominates(r, w) is not Ordering.STRICTLY_LIGHTER:
        return None
    rule = "superheavy_angular"
    chi_w = _value(inp.chi_w)
    if chi_w is None:
        return _missing("chi of the angular pair", rule)
    if chi_w > 0:
        return _fired(inp.chi_w, ONE, rule)
    lighter = not _is_superheavy(r) and _is_superheavy(wmin)
    order = dominates(r, wmin)
    if lighter or order in (Ordering.STRICTLY_LIGHTER, Ordering.SAME_SCALE):
        return _fired(ZERO, inp.eta_w, rule + ".radius_below_minimum")
    return _fired(ZERO, _log_survival_ratio(w, r), rule + ".minimum_below_radius")


def _regular_radial(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    rv = as_reg_var(inp.r_class)
    if rv is None or rv.alpha == 0 or _is_superheavy(inp.w_class):
        return None
    rv_w = as_reg_var(inp.w_class)
    if rv_w is not None and rv_w.alpha <= rv.alpha:
        return None
    rule = "regularly_varying_radial"
    num, den = inp.moments.get("wmin_alpha"), inp.moments.get("w_alpha")
    if num is None or den is None:
        return _missing("E(W^a) or E(min(W1, W2)^a)", rule)
    return _fired(Defined(num / den), ONE, rule)


def _regular_angular(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    rv_w = as_reg_var(inp.w_class)
    if rv_w is None or rv_w.alpha == 0:
        return None
    rv_r = as_reg_var(inp.r_class)
    bounded_or_light = rv_r is None and mda(inp.r_class) in (
        MDA.GUMBEL,
        MDA.NEGATIVE_WEIBULL,
    )
    lighter = dominates(inp.r_class, inp.w_class) is Ordering.STRICTLY_LIGHTER
    if not (lighter or bounded_or_light):
        return None
    if rv_r is not None and _close(rv_r.alpha, rv_w.alpha):
        return None
    rule = "regularly_varying_angular"
    alpha_r = rv_r.alpha if rv_r is not None else math.inf
    alpha_w = rv_w.alpha

    if isinstance(inp.chi_w, Unknown):
        return _missing("chi of the angular pair", rule)
    if isinstance(inp.eta_w, Unknown) and math.isfinite(alpha_r):
        return _missing("eta of the angular pair", rule)
    if math.isinf(alpha_r):
        return _fired(inp.chi_w, inp.eta_w, rule)

    eta_w = _value(inp.eta_w)
    if eta_w is None or eta_w == 0:
        return _fired(inp.chi_w, Defined(alpha_w / alpha_r), rule)
    threshold = alpha_w / eta_w
    if _close(alpha_r, threshold):
        reason = f"radial index {alpha_r} equals the boundary {threshold}"
        return DependenceSummary(inp.chi_w, Unknown(reason), rule + ".boundary")
    if alpha_r < threshold:
        return _fired(inp.chi_w, Defined(alpha_w / alpha_r), rule)
    return _fired(inp.chi_w, inp.eta_w, rule)


def _moment_is_finite(beta: float, key: str, moments: Mapping[str, float]):
    if beta < -1:
        return True
    if beta > -1:
        return False
    if key in moments:
        return math.isfinite(moments[key])
    return None


def _same_tail_index(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    rv_r, rv_w = as_reg_var(inp.r_class), as_reg_var(inp.w_class)
    if rv_r is None or rv_w is None or rv_r.alpha == 0:
        return None
    if not _close(rv_r.alpha, rv_w.alpha):
        return None
    rule = "same_tail_index"
    alpha = rv_r.alpha
    moments = inp.moments
    beta_r, beta_w = rv_r.beta, rv_w.beta
    order = dominates(inp.w_class, inp.r_class)
    chi_w = _value(inp.chi_w)

    def ratio(extra_num: float = 0.0, extra_den: float = 0.0) -> Optional[float]:
        if "wmin_alpha" not in moments or "w_alpha" not in moments:
            return None
        return (moments["wmin_alpha"] + extra_num) / (moments["w_alpha"] + extra_den)

    if beta_r < -1 and order is not Ordering.STRICTLY_HEAVIER:
        sub = rule + ".convolution_equivalent_radius"
        if order is Ordering.STRICTLY_LIGHTER:
            c = 0.0
        elif inp.tail_ratio_c is None:
            return _missing("the tail ratio of W against R", sub)
        else:
            c = inp.tail_ratio_c
        if c == 0:
            chi = ratio()
        elif chi_w is None or "r_alpha" not in moments:
            return _missing("chi of the angular pair or E(R^a)", sub)
        else:
            er = moments["r_alpha"]
            chi = ratio(c * chi_w * er, c * er)
        if chi is None:
            return _missing("E(W^a) or E(min(W1, W2)^a)", sub)
        return _fired(Defined(chi), ONE, sub)

    if beta_w < -1 and order is Ordering.STRICTLY_HEAVIER:
        return _fired(inp.chi_w, ONE, rule + ".convolution_equivalent_angle")

    finite_r = _moment_is_finite(beta_r, "r_alpha", moments)
    if finite_r is None:
        return _missing("whether E(R^a) is finite", rule)
    if finite_r:
        reason = "radius with a finite moment lighter than a heavier angle"
        return DependenceSummary(Unknown(reason), ONE, rule)
    finite_w = _moment_is_finite(beta_w, "w_alpha", moments)

    if chi_w is not None and chi_w > 0 and (beta_w > -1 or finite_w is False):
        return _fired(inp.chi_w, ONE, rule + ".heavy_radius")
    if beta_w < -1 or (_close(beta_w, -1) and beta_r > -1 and finite_w):
        chi = ratio()
        if chi is None:
            return _missing("E(W^a) or E(min(W1, W2)^a)", rule + ".moment_ratio")
        return _fired(Defined(chi), ONE, rule + ".moment_ratio")
    rv_min = as_reg_var(inp.wmin_class)
    lighter_min = (rv_min is not None and rv_min.alpha > alpha) or (
        rv_min is None and not _is_superheavy(inp.wmin_class)
    )
    if beta_r > -1 and beta_w > -1 and lighter_min:
        return _fired(ZERO, ONE, rule + ".light_minimum")
    reason = "sub-case of equal tail indices not determined"
    return DependenceSummary(Unknown(reason), ONE, rule)


def _log_weibull(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    views = [_lwt_view(c) for c in (inp.r_class, inp.w_class, inp.wmin_class)]
    if any(v is None for v in views):
        return None
    r, w, wmin = views
    if not (r.beta > 1 and _close(r.beta, w.beta) and _close(r.beta, wmin.beta)):
        return None
    rule = "log_weibull"
    chi_w = _value(inp.chi_w)
    if chi_w is None:
        return _missing("chi of the angular pair", rule)
    if chi_w > 0:
        return _fired(inp.chi_w, ONE, rule)
    k = 1.0 / (r.beta - 1.0)
    eta_w = w.alpha / wmin.alpha
    eta = eta_w * (
        (wmin.alpha**k + r.alpha**k) / (w.alpha**k + r.alpha**k)
    ) ** (r.beta - 1.0)
    notes = "slowly varying parts assumed asymptotically constant"
    return _fired(ZERO, Defined(eta), rule, notes)


def _weibull(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    views = [as_weibull_type(c) for c in (inp.r_class, inp.w_class, inp.wmin_class)]
    if any(v is None for v in views):
        return None
    r, w, wmin = views
    rule = "weibull_type"
    if wmin.beta > w.beta and not _close(wmin.beta, w.beta):
        return _fired(ZERO, ZERO, rule + ".larger_minimum_index")
    if not _close(wmin.beta, w.beta):
        return None
    if wmin.alpha > w.alpha and not _close(wmin.alpha, w.alpha):
        eta = (w.alpha / wmin.alpha) ** (r.beta / (r.beta + w.beta))
        return _fired(ZERO, Defined(eta), rule + ".larger_minimum_rate")
    if wmin.gamma < w.gamma and not _close(wmin.gamma, w.gamma):
        return _fired(ZERO, ONE, rule + ".smaller_minimum_prefactor")
    return _fired(inp.chi_w, ONE, rule + ".same_minimum")


def _negative_weibull(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    r, w, wmin = inp.r_class, inp.w_class, inp.wmin_class
    angle_bounded = isinstance(w, NegWeibull) and isinstance(wmin, NegWeibull)
    if angle_bounded and not _close(w.endpoint, wmin.endpoint):  # type: ignore
        return None
    if angle_bounded and mda(r) is MDA.GUMBEL:
        return _fired(inp.chi_w, ONE, "negweibull.gumbel_radius")
    if not isinstance(r, NegWeibull):
        return None
    if mda(w) is MDA.GUMBEL and mda(wmin) is MDA.GUMBEL:
        return _fired(inp.chi_w, inp.eta_w, "negweibull.gumbel_angle")
    if not angle_bounded:
        return None
    rule = "negweibull.bounded_angle"
    if _close(wmin.alpha, w.alpha):  # type: ignore
        return _fired(inp.chi_w, ONE, rule)
    eta = (w.alpha + r.alpha) / (wmin.alpha + r.alpha)  # type: ignore
    return _fired(ZERO, Defined(eta), rule)


def _weibull_log_weibull(inp: UnconstrainedInput) -> Optional[DependenceSummary]:
    def light_lwt(c: TailClass) -> bool:
        v = _lwt_view(c)
        return v is not None and v.beta > 1

    r_wt, w_wt = as_weibull_type(inp.r_class), as_weibull_type(inp.w_class)
    if (r_wt is not None and light_lwt(inp.w_class)) or (
        w_wt is not None and light_lwt(inp.r_class)
    ):
        reason = "open problem for Weibull-type and log-Weibull-type tails"
        unknown = Unknown(reason)
        return DependenceSummary(unknown, unknown, "weibull_log_weibull")
    return None


_Rule = Callable[[UnconstrainedInput], Optional[DependenceSummary]]

UNCONSTRAINED_RULES = (
    _superheavy_radial,
    _superheavy_angular,
    _regular_radial,
    _regular_angular,
    _same_tail_index,
    _log_weibull,
    _weibull,
    _negative_weibull,
    _weibull_log_weibull,
)  # type: Tuple[_Rule, ...]
"""Rules for angular pairs with a common margin, in matching order."""


def coefficients_unconstrained(inp: UnconstrainedInput) -> DependenceSummary:
    """Coefficients of ``R (W1, W2)`` for an angular pair with common margins.

    The first rule of :data:`UNCONSTRAINED_RULES` that matches the classes
    of ``R``, ``W`` and ``min(W1, W2)`` decides.
    """
    for rule in UNCONSTRAINED_RULES:
        summary = rule(inp)
        if summary is not None:
            return summary
    reason = (
        f"no rule for R in {inp.r_class.kind}, W in {inp.w_class.kind}, "
        f"min(W1, W2) in {inp.wmin_class.kind}"
    )
    logger.info(reason)
    return DependenceSummary(Unknown(reason), Unknown(reason), "no_rule")


# Closed-form models.


def coefficients_model1(theta: float, r_class: TailClass) -> DependenceSummary:
    """Radius in the Gumbel domain on the sphere of
    ``theta max + (1 - theta) min``.

    Raises
    ------
    :exc:`PreconditionViolated`
        If ``theta < 1/2`` or the radius is not in the Gumbel domain with an
        infinite endpoint.
    """
    if theta < 0.5:
        raise PreconditionViolated(f"theta must be >= 1/2, got {theta}")
    if mda(r_class) is not MDA.GUMBEL or (
        isinstance(r_class, GumbelGeneric) and math.isfinite(r_class.endpoint)
    ):
        raise PreconditionViolated(
            f"{r_class} is not in the Gumbel domain with an infinite endpoint"
        )
    chi = Defined(2.0 * (theta - 1.0) / (2.0 * theta - 1.0)) if theta > 1 else ZERO
    delta = log_hazard_index(r_class)
    if theta >= 1:
        eta = ONE  # type: Coefficient
    elif delta is None:
        eta = Unknown("auxiliary function unspecified")
    else:
        eta = Defined(theta**delta)
    return _fired(chi, eta, "constrained_mix_model")


def _beta_pair(alpha: float) -> IndependentPair:
    return IndependentPair(UnivariateModel("beta", {"shp1": alpha, "shp2": alpha}))


def coefficients_model2(
    xi: float, alpha: float = 1.0, mc_budget: int = DEFAULT_MC_BUDGET, rng=None
) -> DependenceSummary:
    """Generalized Pareto radius of shape ``xi`` with independent
    ``Beta(alpha, alpha)`` angles."""
    if not alpha > 0:
        raise PreconditionViolated(f"alpha must be > 0, got {alpha}")
    rule = "gpd_beta_model"
    if xi > 0:
        if alpha == 1:
            return _fired(Defined(2.0 * xi / (2.0 * xi + 1.0)), ONE, rule)
        return _frechet_summary(
            1.0 / xi, _beta_pair(alpha), rule, mc_budget=mc_budget, rng=rng
        )
    if xi == 0:
        return _fired(ZERO, ONE, rule)
    return _fired(ZERO, Defined((1.0 - xi * alpha) / (1.0 - 2.0 * xi * alpha)), rule)


# Exponent functions and bounds.


def exponent_function(
    angular: AngularModel, alpha: float, x1: float, x2: float
) -> float:
    """Exponent function of the limit of ``R (W1, W2)`` for a regularly
    varying ``R`` of index ``alpha``,
    ``E[max(W1^a / (E(W^a) x1), W2^a / (E(W^a) x2))]``.

    Raises
    ------
    :exc:`PreconditionViolated`
        If ``E(W^a)`` is infinite or a point is not positive.
    :exc:`NonConvergent`
    """
    if not (alpha > 0 and x1 > 0 and x2 > 0):
        raise PreconditionViolated("The exponent function needs alpha, x1, x2 > 0")
    m = angular.margin_moment(alpha)
    if not math.isfinite(m):
        raise PreconditionViolated(f"E(W^{alpha}) is infinite")
    c1, c2 = x1 ** (1.0 / alpha), x2 ** (1.0 / alpha)
    scale = max(c1, c2)
    e_min = survival_moment(
        lambda s: float(angular.joint_survival(s * c1, s * c2)),
        alpha,
        lower=0.0,
        upper=angular.endpoint() / scale,
        split=angular._median() / scale,
    )
    return 1.0 / x1 + 1.0 / x2 - e_min / m


def model2_exponent_function(xi: float, x1: float, x2: float) -> float:
    """Closed-form exponent function of the generalized Pareto radius with
    independent uniform angles, ``xi > 0``."""
    if not (xi > 0 and x1 > 0 and x2 > 0):
        raise PreconditionViolated("Needs xi, x1, x2 > 0")
    lo, hi = min(x1, x2), max(x1, x2)
    return 1.0 / lo + (lo / hi) ** xi / ((2.0 * xi + 1.0) * hi)


def chi_bounds(
    surv1: Callable[[float], float],
    surv2: Callable[[float], float],
    joint: Callable[[float, float], float],
    q: float,
    *,
    upper_endpoint: float = math.inf,
) -> Tuple[float, float]:
    """Bounds on ``P(X1 > F1^-1(q), X2 > F2^-1(q)) / (1 - q)`` for margins
    that differ but share an upper endpoint.

    With ``x_q`` and ``x^q`` the smaller and larger of the two marginal
    quantiles, the lower bound divides ``P(X1 > x^q, X2 > x^q)`` by the
    larger marginal survival at ``x^q``, the upper bound divides
    ``P(X1 > x_q, X2 > x_q)`` by the smaller one at ``x_q``.
    """
    if not 0 < q < 1:
        raise PreconditionViolated(f"q must be in (0, 1), got {q}")
    quantiles = []
    for sf in (surv1, surv2):
        vsf = np.vectorize(lambda x, sf=sf: float(sf(x)))
        quantiles.append(
            float(bisect_survival(vsf, 1.0 - q, upper=upper_endpoint))
        )
    x_lo, x_hi = min(quantiles), max(quantiles)
    lower = joint(x_hi, x_hi) / max(surv1(x_hi), surv2(x_hi))
    upper = joint(x_lo, x_lo) / min(surv1(x_lo), surv2(x_lo))
    return float(lower), float(upper)


# Front door.


def _power_of_class(c: TailClass, k: float, *, exact: bool = True) -> TailClass:
    """Class of ``P(W > x)^k``.

    With ``exact=False`` only the leading rate is scaled and the prefactor
    constants are dropped.
    """
    if isinstance(c, (WeibullType, LogWeibullType)):
        ell = c.ell_limit**k if exact and c.ell_limit else None
        gamma = k * c.gamma if exact else c.gamma
        return replace(c, alpha=k * c.alpha, gamma=gamma, ell_limit=ell)
    if isinstance(c, (ExpTailed, RegVarInf)):
        return replace(c, alpha=k * c.alpha, beta=k * c.beta)
    if isinstance(c, NegWeibull):
        ell = c.ell_limit**k if exact and c.ell_limit else None
        return replace(c, alpha=k * c.alpha, ell_limit=ell)
    if isinstance(c, ConvEquiv):
        return ConvEquiv(k * c.alpha)
    if isinstance(c, SuperHeavy):
        return SuperHeavy(_power_of_class(c.log_class, k, exact=exact))
    return c


def _tail_ratio(w: UnivariateModel, r: UnivariateModel) -> Optional[float]:
    """``lim P(W > x) / P(R > x)`` from classes carrying their constants."""
    for cw in w.tail_classes():
        for cr in r.tail_classes():
            if type(cw) is not type(cr):
                continue
            ell_w = getattr(cw, "ell_limit", None)
            ell_r = getattr(cr, "ell_limit", None)
            if ell_w and ell_r and dominates(cw, cr) is Ordering.SAME_SCALE:
                return ell_w / ell_r
    return None


def _side_data(
    angular: AngularModel, w: TailClass
) -> Tuple[TailClass, Coefficient, Coefficient]:
    if isinstance(angular, ComonotonePair) or (
        isinstance(angular, GaussianCopulaPair) and angular.rho == 1
    ):
        return w, ONE, ONE
    if isinstance(angular, IndependentPair):
        return _power_of_class(w, 2.0), ZERO, Defined(0.5)
    if isinstance(angular, GaussianCopulaPair):
        k = 2.0 / (1.0 + angular.rho)
        return (
            _power_of_class(w, k, exact=False),
            ZERO,
            Defined((1.0 + angular.rho) / 2.0),
        )
    raise InvalidSpec(f"No side data for angular kind {angular.kind}")


def _moments(spec: ConstructionSpec, r_class: TailClass) -> JSONDict:
    rv = as_reg_var(r_class)
    if rv is None or rv.alpha == 0:
        return {}
    alpha = rv.alpha
    moments = {}
    for key, f in (
        ("r_alpha", lambda: spec.radial.moment(alpha)),
        ("w_alpha", lambda: spec.angular.margin_moment(alpha)),
        ("wmin_alpha", lambda: spec.angular.min_moment(alpha)),
    ):
        try:
            moments[key] = f()
        except NonConvergent as e:
            logger.warning(f"Skipping {key} at order {alpha}: {e}")
    return moments


def unconstrained_input(spec: ConstructionSpec) -> UnconstrainedInput:
    """Rule inputs of a construction with an unconstrained angular pair."""
    r_class = spec.radial.tail_class()
    margin = spec.angular.margin  # type: ignore
    w_class = margin.tail_class()
    if r_class is None or w_class is None:
        raise PreconditionViolated("Point masses have no tail class")
    wmin_class, chi_w, eta_w = _side_data(spec.angular, w_class)
    return UnconstrainedInput(
        r_class=r_class,
        w_class=w_class,
        wmin_class=wmin_class,
        chi_w=chi_w,
        eta_w=eta_w,
        tail_ratio_c=_tail_ratio(margin, spec.radial),
        moments=_moments(spec, r_class),
    )


def coefficients(
    spec: ConstructionSpec, mc_budget: int = DEFAULT_MC_BUDGET, rng=None
) -> DependenceSummary:
    """``chi`` and ``eta`` of a construction.

    Presets with closed forms dispatch to them. Norm-sphere constructions use
    the norm profile and ``P(W = 1)``. Angular pairs with a common margin use
    the tail classes of ``R``, ``W`` and ``min(W1, W2)`` together with the
    dependence implied by the pair.
    """
    logger.info(f"Coefficients of spec {spec.fingerprint[:12]}")
    preset = spec.preset
    if preset is not None and preset.name == "model1":
        return coefficients_model1(preset.params["theta"], spec.radial.tail_class())
    if preset is not None and preset.name == "model2":
        return coefficients_model2(
            preset.params["xi"], preset.params["alpha"], mc_budget, rng
        )

    angular = spec.angular
    if isinstance(angular, SwappedPair):
        # (W2, W1) has the coefficients of (W1, W2)
        return coefficients(
            ConstructionSpec(spec.radial, angular.pair), mc_budget=mc_budget, rng=rng
        )
    if spec.radial.is_degenerate:
        if isinstance(angular, ConstrainedSphere):
            reason = "a constant radius on a norm sphere has bounded support"
            unknown = Unknown(reason)
            return DependenceSummary(unknown, unknown, "constant_radius")
        margin_class = angular.margin.tail_class()  # type: ignore
        _, chi_w, eta_w = _side_data(angular, margin_class)
        return _fired(chi_w, eta_w, "constant_radius")
    if getattr(angular, "margin", None) is not None and angular.margin.is_degenerate:
        return _fired(ONE, ONE, "constant_angle")

    r_class = spec.radial.tail_class()
    if isinstance(angular, ConstrainedSphere):
        return coefficients_constrained(
            r_class,
            profile(angular.norm),
            angular.atom_at_one(),
            angular=angular,
            mc_budget=mc_budget,
            rng=rng,
        )
    return coefficients_unconstrained(unconstrained_input(spec))

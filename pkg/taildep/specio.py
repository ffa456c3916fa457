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

"""Construction specs ``X = R (W1, W2)`` and their YAML/JSON documents.

A document looks like::

    spec_version: 1
    radial:
      family: weibull
      params: {shp: 2.0}
    angular:
      kind: constrained_sphere
      norm: {kind: theta_mix, theta: 1.25}
      z: {family: beta, params: {shp1: 2.0}}

or names a preset::

    spec_version: 1
    model: {name: model2, xi: 0.5, alpha: 1.0}
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple, Union

from .angular import (
    AngularModel,
    ConstrainedSphere,
    GaussianCopulaPair,
    IndependentPair,
    angular_from_dict,
    univariate_from_dict,
)
from .distmodel import UnivariateModel
from .exceptions import InvalidSpec
from .normgeom import make_norm
from .utils import JSONDict, fingerprint
from .validation import presets_template, validate_params
from .yaml_utils import read_yaml_file

logger = logging.getLogger(__name__)

SPEC_VERSION = 1


@dataclass(frozen=True)
class Preset:
    """A named construction with validated parameters."""

    name: str
    params: JSONDict = field(hash=False)

    def to_json(self) -> JSONDict:
        return {"name": self.name, **self.params}


def make_preset(name: str, params: Optional[JSONDict] = None) -> Preset:
    """Validate the parameters of a preset.

    Raises
    ------
    :exc:`InvalidSpec`
        For unknown presets.
    :exc:`InvalidParams`
    """
    validated = validate_params(
        name, params or {}, template=presets_template(), missing=InvalidSpec
    )
    return Preset(name, validated)


def expand_preset(preset: Preset) -> Tuple[UnivariateModel, AngularModel]:
    """Explicit radial and angular parts of a preset."""
    p = preset.params
    if preset.name == "model1":
        radial = UnivariateModel("weibull", {"shp": p["delta"], "scl": 1.0})
        z = UnivariateModel("beta", {"shp1": p["alpha"], "shp2": p["alpha"]})
        norm = make_norm("theta_mix", {"theta": p["theta"]})
        return radial, ConstrainedSphere(norm, z)
    if preset.name == "model2":
        radial = UnivariateModel("genpareto", {"shp": p["xi"], "loc": 0.0, "scl": 1.0})
        w = UnivariateModel("beta", {"shp1": p["alpha"], "shp2": p["alpha"]})
        return radial, IndependentPair(w)
    # gaussian_factor
    std_lognormal = UnivariateModel("lognormal", {"loc": 0.0, "scl": 1.0})
    return std_lognormal, GaussianCopulaPair(p["rho"], std_lognormal)


@dataclass(frozen=True)
class ConstructionSpec:
    """``X = R (W1, W2)`` with ``R`` independent of the angular pair.

    The radial law is conditioned to be positive on construction.
    """

    radial: UnivariateModel
    angular: AngularModel
    preset: Optional[Preset] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "radial", self.radial.conditioned_positive())

    @classmethod
    def from_preset(
        cls, name: str, params: Optional[JSONDict] = None
    ) -> "ConstructionSpec":
        preset = make_preset(name, params)
        radial, angular = expand_preset(preset)
        return cls(radial, angular, preset)

    def to_json(self) -> JSONDict:
        return spec_to_dict(self)

    @property
    def fingerprint(self) -> str:
        return fingerprint(spec_to_dict(self))


def spec_from_dict(d: JSONDict) -> ConstructionSpec:
    """Build a construction from a spec document.

    Raises
    ------
    :exc:`InvalidSpec`
        For a missing or wrong ``spec_version``, unknown keys, or when
        neither a preset nor both radial and angular parts are given.
    :exc:`UnknownFamily`
    :exc:`InvalidParams`
    """
    if d.get("spec_version") != SPEC_VERSION:
        raise InvalidSpec(
            f"Spec documents must carry spec_version: {SPEC_VERSION}, "
            f"got {d.get('spec_version')!r}"
        )
    unexpected = sorted(set(d) - {"spec_version", "model", "radial", "angular"})
    if unexpected:
        raise InvalidSpec(f"Unexpected keys in spec document: {', '.join(unexpected)}")

    if "model" in d:
        if "radial" in d or "angular" in d:
            raise InvalidSpec(
                "A preset model excludes explicit radial and angular parts"
            )
        model = dict(d["model"])
        if "name" not in model:
            raise InvalidSpec("A preset model needs a name")
        spec = ConstructionSpec.from_preset(model.pop("name"), model)
    else:
        if "radial" not in d or "angular" not in d:
            raise InvalidSpec(
                "A spec document needs a model, or a radial and an angular part"
            )
        spec = ConstructionSpec(
            univariate_from_dict(d["radial"]), angular_from_dict(d["angular"])
        )
    logger.info(f"Spec {spec.fingerprint[:12]}: {spec_to_dict(spec)}")
    return spec


def spec_to_dict(spec: ConstructionSpec) -> JSONDict:
    """The document form of a construction, read back by :func:`spec_from_dict`."""
    if spec.preset is not None:
        return {"spec_version": SPEC_VERSION, "model": spec.preset.to_json()}
    return {
        "spec_version": SPEC_VERSION,
        "radial": spec.radial.to_json(),
        "angular": spec.angular.to_json(),
    }


def read_spec_file(path: Union[str, Path]) -> ConstructionSpec:
    """Read a YAML or JSON spec document."""
    return spec_from_dict(read_yaml_file(path))

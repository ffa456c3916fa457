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

"""Validation of parameter maps against catalog templates."""

from functools import lru_cache
from typing import Type

from .check_template import is_template_valid
from .exceptions import InvalidParams, TaildepError, UnknownFamily, collate_errors
from .utils import JSONDict
from .validation_plumbing import (
    _rec_check_predicates,
    _rec_fix_defaults,
    _rec_merge_ours,
)
from .views import view_by_default, view_by_predicates, view_by_type
from .yaml_utils import read_packaged_template


@lru_cache(maxsize=None)
def _load_catalog(name: str) -> JSONDict:
    return is_template_valid(read_packaged_template(name))


def families_template() -> JSONDict:
    """The checked and reordered template of parametric families."""
    return _load_catalog("families.yml")


def norms_template() -> JSONDict:
    """The checked and reordered template of norm kinds."""
    return _load_catalog("norms.yml")


def presets_template() -> JSONDict:
    """The checked and reordered template of preset constructions."""
    return _load_catalog("presets.yml")


def catalog_names(template: JSONDict) -> list:
    """Names of the sections of a catalog template, in declaration order."""
    return [s["name"] for s in template.get("sections", [])]


def catalog_section(
    template: JSONDict, name: str, *, missing: Type[TaildepError] = UnknownFamily
) -> JSONDict:
    """A template restricted to one of its sections.

    Parameters
    ----------
    template : JSONDict
    name : str
    missing : Type[TaildepError]
        Exception raised when ``name`` is not a section of ``template``.

    Returns
    -------
    restricted : JSONDict
        A template whose only section is ``name``.
    """
    for s in template.get("sections", []):
        if s["name"] == name:
            return {"sections": [s]}
    raise missing(
        f"'{name}' is not in the catalog. Known: {', '.join(catalog_names(template))}"
    )


def validate_params(
    name: str,
    params: JSONDict,
    *,
    template: JSONDict,
    missing: Type[TaildepError] = UnknownFamily,
) -> JSONDict:
    """Validate the parameter map of one catalog entry.

    Parameters
    ----------
    name : str
        Family or norm kind.
    params : JSONDict
        User parameters. Missing parameters take their defaults.
    template : JSONDict
        The whole catalog, as returned by :func:`families_template` or
        :func:`norms_template`.
    missing : Type[TaildepError]
        Raised when ``name`` is not in the catalog.

    Returns
    -------
    validated : JSONDict
        Parameters with defaults fixed and types coerced.

    Raises
    ------
    :exc:`UnknownFamily`
        If ``name`` is not in the catalog, unless ``missing`` says otherwise.
    :exc:`InvalidParams`
        Collecting every problem found.
    """
    restricted = catalog_section(template, name, missing=missing)
    validated = validate_from_dicts(user={name: dict(params)}, template=restricted)
    return validated[name]


def validate_from_dicts(*, user: JSONDict, template: JSONDict) -> JSONDict:
    """Validate a parameter tree against a _checked_ template.

    Parameters
    ----------
    user : JSONDict
    template : JSONDict

    Returns
    -------
    validated : JSONDict

    Raises
    ------
    :exc:`InvalidParams`
    """
    stencil = view_by_default(template)
    types = view_by_type(template)
    predicates = view_by_predicates(template)

    validated = merge_ours(theirs=stencil, ours=user)
    validated = fix_defaults(validated, types=types)
    check_predicates(validated, predicates=predicates)

    return validated


def merge_ours(*, theirs: JSONDict, ours: JSONDict) -> JSONDict:
    """Recursively merge two `dict`-s with "ours" strategy.

    Parameters
    ----------
    theirs : JSONDict
    ours : JSONDict

    Returns
    -------
    outgoing : JSONDict

    Raises
    ------
    :exc:`InvalidParams`

    Notes
    -----
    The ``theirs`` dictionary is the view by defaults of the template, whereas
    ``ours`` holds the user parameters. User values win over defaults, hence
    the naming "ours" for the merge strategy.

    This is porcelain over the recursive function :func:`_rec_merge_ours`.
    """
    outgoing, errors = _rec_merge_ours(theirs=theirs, ours=ours)

    if errors:
        raise InvalidParams(collate_errors(when="merging", errors=errors))

    return outgoing


def fix_defaults(incoming: JSONDict, *, types: JSONDict) -> JSONDict:
    """Fix default values and perform type checking.

    Parameters
    ----------
    incoming: JSONDict
        The result of :func:`merge_ours`.
    types: JSONDict
        Types of all keywords, from :func:`view_by_type`.

    Returns
    -------
    outgoing: JSONDict

    Raises
    ------
    :exc:`InvalidParams`

    Notes
    -----
    This is porcelain over recursive function :func:`_rec_fix_defaults`.
    """
    outgoing, errors = _rec_fix_defaults(incoming, types=types)

    if errors:
        raise InvalidParams(collate_errors(when="fixing defaults", errors=errors))

    return outgoing


def check_predicates(incoming: JSONDict, *, predicates: JSONDict) -> None:
    """Run predicates on a parameter tree with fixed defaults.

    Raises
    ------
    :exc:`InvalidParams`

    Notes
    -----
    This is porcelain over recursive function :func:`_rec_check_predicates`.
    """
    errors = _rec_check_predicates(incoming, predicates=predicates)

    if errors:
        raise InvalidParams(collate_errors(when="checking predicates", errors=errors))

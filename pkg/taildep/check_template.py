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

"""Checks of the catalog templates shipped with taildep."""

import re
from copy import deepcopy
from typing import List, Optional, Tuple

import networkx as nx

from .exceptions import Error, InvalidSpec, collate_errors
from .types import allowed_types, type_matches
from .utils import JSONDict, location_in_dict
from .views import view_by_default, view_by_default_keywords

_USER_REFERENCE = re.compile(r"user((?:\[['\"][^'\"]*['\"]\])+)")
_KEY = re.compile(r"\[['\"]([^'\"]*)['\"]\]")


def is_template_valid(template: JSONDict) -> JSONDict:
    """Checks a catalog template is well-formed.

    A template is well-formed if:

    * All keywords have an allowed type and a non-empty docstring.
    * Literal defaults match the declared type.
    * No sections are nested under keywords.
    * All sections have a non-empty docstring.
    * Callable defaults do not depend on each other cyclically.

    Parameters
    ----------
    template : JSONDict

    Returns
    -------
    ordered : JSONDict
        The template with keywords reordered so that every callable default
        comes after the keywords it refers to.

    Raises
    ------
    :exc:`InvalidSpec`
    """

    errors = _rec_is_template_valid(template)
    errors.extend(_check_cyclic_defaults(template))

    if errors:
        raise InvalidSpec(collate_errors(when="checking the template", errors=errors))

    return _reorder_template(template)


def _rec_is_template_valid(template: JSONDict, *, address: Tuple = ()) -> List[Error]:
    errors = []

    for k in template.get("keywords", []):
        errors.extend(_check_keyword(k, address=address))

    for s in template.get("sections", []):
        if _undocumented(s):
            errors.append(
                Error(
                    (address + (s["name"],)),
                    "Sections must have a non-empty docstring.",
                )
            )
        errors.extend(_rec_is_template_valid(s, address=(address + (s["name"],))))

    return errors


def _default_dependencies(
    section: JSONDict, parent_sections: Optional[List[str]] = None
) -> List[Tuple[Tuple[str, ...], Tuple[str, ...]]]:
    """Collects pairs (keyword, default dependency) as address tuples.

    One such a pair could look like this::

        (('beta', 'shp2'), ('beta', 'shp1'))
    """
    parents = [] if parent_sections is None else parent_sections
    dependencies = []
    for k, v in section.items():
        if isinstance(v, dict):
            dependencies += _default_dependencies(v, parents + [k])
        elif isinstance(v, str) and "user" in v:
            _from = tuple(parents + [k])
            dependencies.extend((_from, _to) for _to in _referenced_addresses(v))
    return dependencies


def _referenced_addresses(default: str) -> List[Tuple[str, ...]]:
    """Addresses referenced by a callable default.

    ``"1.0 / user['exponential']['scl']"`` refers to
    ``('exponential', 'scl')``.
    """
    return [
        tuple(_KEY.findall(m.group(1))) for m in _USER_REFERENCE.finditer(default)
    ]


def _check_cyclic_defaults(template: JSONDict) -> List[Error]:
    """Check for cyclic dependencies between defaulting actions."""
    G = nx.DiGraph(_default_dependencies(view_by_default(template)))
    errors = []
    for c in nx.simple_cycles(G):
        errors.append(
            Error(
                c[0],
                f"Keyword depends cyclically on keyword {location_in_dict(address=c[1 % len(c)])}",  # noqa: E501
            )
        )
    return errors


def _reorder_template(template: JSONDict) -> JSONDict:
    """Reorder a template according to the graph of keyword dependencies.

    Warnings
    --------
    We are assuming that there are no dependency cycles in the template. Call
    this function **after** :func:`_check_cyclic_defaults`.
    """

    ordered = deepcopy(template)
    _rec_reorder_template(ordered)
    return ordered


def _rec_reorder_template(template: JSONDict) -> None:
    keywords = template.get("keywords", [])
    deps = _default_dependencies(view_by_default_keywords(keywords))
    G = nx.DiGraph()
    G.add_nodes_from(x["name"] for x in keywords)
    # edges point from dependency to dependent
    G.add_edges_from((_to[-1], _from[-1]) for _from, _to in deps if len(_to) > 0)
    order = list(nx.topological_sort(G))

    by_name = {x["name"]: x for x in keywords}
    template_keywords = [by_name[n] for n in order if n in by_name]
    if "keywords" in template:
        template["keywords"] = template_keywords

    for s in template.get("sections", []):
        _rec_reorder_template(s)


def _check_keyword(keyword: JSONDict, *, address: Tuple = ()) -> List[Error]:
    """Checks that a template keyword is well-formed.

    Callable defaults and predicates can only be checked meaningfully against
    a user parameter map.
    """

    errors = []

    k = keyword["name"]
    if "sections" in keyword.keys():
        errors.append(
            Error((address + (k,)), "Sections cannot be nested under keywords.")
        )

    if _untyped(keyword):
        errors.append(Error((address + (k,)), "Keywords must have a valid type."))
    elif "default" in keyword.keys():
        default = keyword["default"]
        callable_default = isinstance(default, str) and "user" in default
        if not callable_default and not type_matches(default, keyword["type"]):
            errors.append(
                Error(
                    (address + (k,)),
                    f"Default {default!r} does not match type {keyword['type']}.",
                )
            )

    if _undocumented(keyword):
        errors.append(
            Error((address + (k,)), "Keywords must have a non-empty docstring.")
        )

    return errors


def _undocumented(x: JSONDict) -> bool:
    return "docstring" not in x.keys() or x["docstring"].strip() == ""


def _untyped(x: JSONDict) -> bool:
    return "type" not in x.keys() or x["type"] not in allowed_types

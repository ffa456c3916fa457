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

"""Views of catalog templates.

A catalog template is a tree of sections (one per family or norm kind) holding
keywords (one per parameter). A view collapses every keyword to one of its
fields, keeping the section structure, so that a view by defaults has the same
shape as a user parameter map.
"""

from typing import Any, Callable, List, Optional, Type

from .exceptions import InvalidSpec
from .utils import JSONDict


def view_by_type(d: JSONDict) -> JSONDict:
    """Types of every keyword, for checking family parameters.

    Parameters
    ----------
    d: JSONDict
        A catalog template or one of its sections.

    Returns
    -------
    outgoing: JSONDict
       Keyword names mapped to their type strings, ``InvalidSpec`` where the
       template omits a type.
    """
    return view_by("type", d, missing=InvalidSpec)


def view_by_default(d: JSONDict) -> JSONDict:
    """Defaults of every keyword.

    Parameters
    ----------
    d: JSONDict
        A catalog template or one of its sections.

    Returns
    -------
    outgoing: JSONDict
       Keyword names mapped to their defaults, ``None`` for required
       parameters. Defaults may still be expressions over other parameters.
    """
    return view_by("default", d)


def view_by_default_keywords(keywords: List[JSONDict]) -> JSONDict:
    """View by defaults only for lists of keywords.

    Parameters
    ----------
    keywords: List[JSONDict]

    Returns
    -------
    outgoing: JSONDict
       A dictionary with a view by defaults for the keywords.
    """
    return {v["name"]: v["default"] if "default" in v else None for v in keywords}


def view_by_docstring(d: JSONDict) -> JSONDict:
    """Docstrings of every keyword, right-stripped.

    Used to describe the parameters of a family on the command line.

    Parameters
    ----------
    d: JSONDict
        A catalog template or one of its sections.

    Returns
    -------
    outgoing: JSONDict
       Keyword names mapped to their docstrings, ``InvalidSpec`` where a
       docstring is missing or blank.
    """

    def docstring_not_empty(x: JSONDict, y: str) -> bool:
        return y in x and x[y].strip() != ""

    return view_by(
        "docstring",
        d,
        predicate=docstring_not_empty,
        missing=InvalidSpec,
        transformer=lambda x: x.rstrip(),
    )


def view_by_predicates(d: JSONDict) -> JSONDict:
    """Predicates of every keyword.

    Parameters
    ----------
    d: JSONDict
        A catalog template or one of its sections.

    Returns
    -------
    outgoing: JSONDict
       Keyword names mapped to their lists of predicate strings, ``None`` for
       unconstrained parameters.
    """
    return view_by("predicates", d)


def view_by(
    what: str,
    d: JSONDict,
    *,
    predicate: Callable[[Any, str], bool] = lambda x, y: True,
    missing: Optional[Type[Exception]] = None,
    transformer: Callable[[Any], Any] = lambda x: x,
) -> JSONDict:
    """Recursive decimation of a template into a view.

    Parameters
    ----------
    what : str
        What view to extract from the dictionary. Any of ``type``, ``default``,
        ``docstring`` or ``predicates`` is allowed.
    d: JSONDict
    predicate: Callable
       A predicate accepting two arguments.
    missing: Optional[Exception]
       Placeholder for keywords lacking the field or failing the predicate.
    transformer: Callable

    Returns
    -------
    outgoing: JSONDict
       A dictionary with the desired view.

    Raises
    ------
    exc:`ValueError` if `what` is not among the allowed views.
    """

    allowed = ["type", "default", "docstring", "predicates"]
    if what not in allowed:
        raise ValueError(
            f"Requested view {what:s} not among possible views ({allowed})"
        )

    view = {}  # type: JSONDict
    for v in d.get("keywords", []):
        view[v["name"]] = (
            transformer(v[what]) if what in v and predicate(v, what) else missing
        )

    for section in d.get("sections", []):
        view[section["name"]] = view_by(
            what,
            section,
            predicate=predicate,
            missing=missing,
            transformer=transformer,
        )

    return view

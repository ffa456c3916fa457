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

"""Plumbing functions powering parameter validation."""

import math
from copy import deepcopy
from typing import Any, List, Optional, Tuple

from .exceptions import Error
from .types import type_fixers, type_matches
from .utils import JSONDict, location_in_dict, nested_set

_CLOSURE_NAMESPACE = {"math": math, "abs": abs, "min": min, "max": max}
"""Names visible to default callables and predicates besides ``user``."""


def _rec_merge_ours(
    *, theirs: JSONDict, ours: JSONDict, address: Tuple = ()
) -> Tuple[JSONDict, List[Error]]:
    """Recursively merge two ``dict``-s with "ours" strategy.

    Parameters
    ----------
    theirs : JSONDict
        View by defaults of the template.
    ours : JSONDict
        User parameter map.
    address : Tuple

    Returns
    -------
    outgoing : JSONDict
    errors : List[Error]
    """
    outgoing = {}
    errors = []

    for k in sorted(set(ours.keys()).difference(set(theirs.keys()))):
        what = "section" if isinstance(ours[k], dict) else "parameter"
        errors.append(Error(address, f"Found unexpected {what}: '{k}'."))

    for k, v in theirs.items():
        if k not in ours.keys():
            outgoing[k] = v
            if v is None:
                msg = f"Parameter '{k}' is required but has no value."
                errors.append(Error((address + (k,)), msg))
        elif not isinstance(v, dict):
            outgoing[k] = ours[k]
        elif not isinstance(ours[k], dict):
            errors.append(Error((address + (k,)), f"Expected a section for '{k}'."))
        else:
            outgoing[k], errs = _rec_merge_ours(
                theirs=v, ours=ours[k], address=(address + (k,))
            )
            errors.extend(errs)

    return outgoing, errors


def _rec_fix_defaults(
    incoming: JSONDict,
    *,
    types: JSONDict,
    start_dict: JSONDict = None,
    address: Tuple = (),
) -> Tuple[JSONDict, List[Error]]:
    """Fix default values and perform type checking.

    Parameters
    ----------
    incoming : JSONDict
        The merged parameter map.
    types: JSONDict
        View by types of the template.
    start_dict : JSONDict
        The ``dict`` we start recursion from, visible to callables as ``user``.
    address : Tuple[str]

    Returns
    -------
    outgoing : JSONDict
        A dictionary with all default values fixed.
    errors : List[Error]

    Notes
    -----
    A value that does not type-check but is a string containing the reserved
    token "user" is a callable default: it is evaluated against the whole
    parameter tree and its result coerced to the declared type. Values are
    fixed in template order, which :func:`is_template_valid` sorts
    topologically, so chains of dependent defaults resolve.
    """

    if start_dict is None:
        start_dict = deepcopy(incoming)

    outgoing = {}
    errors = []

    for k, v in incoming.items():
        if isinstance(v, dict):
            outgoing[k], errs = _rec_fix_defaults(
                incoming=v,
                types=types[k],
                start_dict=start_dict,
                address=(address + (k,)),
            )
            errors.extend(errs)
            continue

        if v is None:
            # already reported as missing while merging
            outgoing[k] = None
            continue

        t = types[k]
        if type_matches(v, t):
            msg = ""
            outgoing[k] = type_fixers[t](v)
        elif isinstance(v, str) and "user" in v:
            msg, outgoing[k] = run_callable(v, start_dict, t=t)
        else:
            actual = (
                type(v).__name__
                if not isinstance(v, list)
                else f"List[{', '.join([type(x).__name__ for x in v])}]"
            )
            msg = f"Actual ({actual}) and declared ({t}) types do not match."

        if msg != "":
            errors.append(Error(address + (k,), msg))
        else:
            nested_set(start_dict, address + (k,), outgoing[k])

    return outgoing, errors


def _rec_check_predicates(
    incoming: JSONDict,
    *,
    predicates: JSONDict,
    start_dict: JSONDict = None,
    address: Tuple = (),
) -> List[Error]:
    """Run predicates on a parameter tree with fixed defaults.

    Parameters
    ----------
    incoming : JSONDict
        The result of :func:`_rec_fix_defaults`.
    predicates : JSONDict
        View by predicates of the template.
    start_dict : JSONDict
    address : Tuple[str]

    Returns
    -------
    errors : List[Error]
    """

    errors = []

    if start_dict is None:
        start_dict = incoming

    for k, v in incoming.items():
        if predicates.get(k) is None:
            continue
        if isinstance(v, dict):
            errors.extend(
                _rec_check_predicates(
                    incoming=v,
                    predicates=predicates[k],
                    start_dict=start_dict,
                    address=(address + (k,)),
                )
            )
        elif v is not None:
            where = location_in_dict(address=(address + (k,)))
            for p in predicates[k]:
                msg, success = run_predicate(p, where, start_dict)
                if not success:
                    errors.append(Error((address + (k,)), msg))

    return errors


def run_predicate(predicate: str, where: str, user: JSONDict) -> Tuple[str, bool]:
    """Run a predicate to check whether it is satisfied.

    Parameters
    ----------
    predicate : str
    where : str
        Address of the value in ``user``, substituted for the placeholder
        ``value``.
    user : JSONDict

    Returns
    -------
    msg, success : Tuple[str, bool]
    """

    p = predicate.replace("value", where)

    msg, success = _evaluate(p, user, label=predicate)
    if msg == "" and not success:
        msg = f"Predicate '{predicate}' not satisfied."

    return msg, bool(success)


def run_callable(f: str, d: JSONDict, *, t: str) -> Tuple[str, Optional[Any]]:
    """Run a callable default encoded as a string.

    Parameters
    ----------
    f : str
    d : JSONDict
        The whole parameter tree, visible to the callable as ``user``.
    t : str
        Expected type.

    Returns
    -------
    retval : Tuple[str, Optional[Any]]
        The error message, if any, and the result of the callable, if any.
    """

    msg, result = _evaluate(f, d, label=f)
    if msg == "":
        try:
            result = type_fixers[t](result)
        except (TypeError, ValueError) as e:
            msg = f"{type(e).__name__} {e} in closure '{f}'."
            result = None

    return msg, result


def _evaluate(expression: str, user: JSONDict, *, label: str) -> Tuple[str, Any]:
    try:
        return "", eval(f"lambda user: {expression}", dict(_CLOSURE_NAMESPACE))(user)
    except (
        KeyError,
        SyntaxError,
        TypeError,
        NameError,
        ValueError,
        ZeroDivisionError,
    ) as e:
        return f"{type(e).__name__} {e} in closure '{label}'.", None

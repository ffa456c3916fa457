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

"""Keyword types admitted in catalog templates."""

import math
import re
from typing import Any, Callable, Dict, List, Union

ScalarTypes = Union[bool, str, int, float]

allowed_scalar_types = ["str", "int", "float", "bool"]

ListTypes = Union[List[str], List[int], List[float]]

allowed_list_types = ["List[str]", "List[int]", "List[float]"]

AllowedTypes = Union[ScalarTypes, ListTypes]

allowed_types = allowed_scalar_types + allowed_list_types


def type_matches(value: AllowedTypes, expected_type: str) -> bool:
    """Checks whether a value is of the expected type.

    Parameters
    ----------
    value : AllowedTypes
      Value whose type needs to be checked
    expected_type : str

    Returns
    -------
    True if value has the type expected_type, otherwise False.

    Raises
    ------
    ValueError
      If `expected_type` is not among the allowed types.

    Notes
    -----
    Integers are accepted where floats are expected: a YAML document writing
    ``shp: 3`` means the real number 3. Booleans are never numbers, and
    non-finite floats never match, since every catalog parameter is a finite
    real.
    """

    if expected_type not in allowed_types:
        raise ValueError(f"could not recognize expected_type: {expected_type}")

    expected_type_is_list = re.search(r"^List\[(\w+)\]$", expected_type)

    if expected_type_is_list is not None:
        return _type_check_list(value, expected_type_is_list.group(1))  # type: ignore
    return _type_check_scalar(value, expected_type)


def _type_check_scalar(value: Any, expected_type: str) -> bool:
    if isinstance(value, bool):
        return expected_type == "bool"
    if expected_type == "float":
        return isinstance(value, (int, float)) and math.isfinite(value)
    return type(value).__name__ == expected_type


def _type_check_list(value: Any, expected_type: str) -> bool:
    if isinstance(value, list):
        return all(_type_check_scalar(x, expected_type) for x in value)
    return False


type_fixers = {
    "bool": bool,
    "float": float,
    "int": int,
    "str": str,
    "List[float]": lambda x: list(map(float, x)),
    "List[int]": lambda x: list(map(int, x)),
    "List[str]": lambda x: list(map(str, x)),
}  # type: Dict[str, Callable[[Any], Any]]
"""Dict[str, Callable[[Any], Any]]: dictionary holding functions for type fixation."""

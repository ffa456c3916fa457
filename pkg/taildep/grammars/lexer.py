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

"""Top-level functions parsing inline parameter maps and grids."""

from typing import List

import numpy as np
import pyparsing as pp

from ..exceptions import InvalidSpec
from ..utils import JSONDict
from . import params


def parse_params(in_str: str) -> JSONDict:
    """Parse ``"key=value, ..."`` into a parameter map.

    Raises
    ------
    :exc:`InvalidSpec`
        On syntax errors and repeated keys.
    """
    if in_str.strip() == "":
        return {}
    try:
        pairs = params.params_grammar().parse_string(in_str).as_list()
    except pp.ParseBaseException as e:
        raise InvalidSpec(f"Cannot parse parameters {in_str!r}: {e}")

    keys = [k for k, _ in pairs]
    repeated = sorted({k for k in keys if keys.count(k) > 1})
    if repeated:
        raise InvalidSpec(f"Repeated parameters: {', '.join(repeated)}")
    return dict(pairs)


def parse_grid(in_str: str, *, context: str = "q") -> List[float]:
    """Parse a grid expression into ascending values.

    Parameters
    ----------
    in_str : str
    context : str
        ``"q"`` for probability levels: ``logspace(a, b, n)`` spaces
        ``1 - q`` between ``10^a`` and ``10^b``. ``"x"`` for raw values,
        ``logspace`` spacing the values themselves.

    Raises
    ------
    :exc:`InvalidSpec`
        On syntax errors, fewer than one point, or repeated values.
    """
    try:
        tokens = params.grid_grammar().parse_string(in_str).as_list()
    except pp.ParseBaseException as e:
        raise InvalidSpec(f"Cannot parse grid {in_str!r}: {e}")

    kind = tokens[0].lower()
    if kind == "list":
        values = np.asarray(tokens[1:], dtype=float)
    else:
        a, b, n = tokens[1:]
        if n < 1:
            raise InvalidSpec(f"A grid needs at least one point, got {n}")
        if kind == "linspace":
            values = np.linspace(a, b, n)
        elif context == "q":
            values = 1.0 - np.logspace(a, b, n)
        else:
            values = np.logspace(a, b, n)

    values = np.sort(values)
    if np.any(np.diff(values) <= 0):
        raise InvalidSpec(f"Grid {in_str!r} repeats values")
    return [float(v) for v in values]

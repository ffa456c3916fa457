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

"""Grammars of inline parameter maps and grids."""

import pyparsing as pp

from .atoms import bool_t, int_t, make_list_t, num_t, quoted_str_t, unquoted_str_t

GRID_FUNCTIONS = ("logspace", "linspace")


def params_grammar() -> pp.ParserElement:
    """Comma-separated ``key = value`` pairs, as in ``"shp=3, scl=1"``.

    Values are numbers, booleans, strings or lists of numbers.

    Returns
    -------
    A parsing grammar.
    """
    EQ = pp.Suppress("=")

    key = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    scalar = num_t ^ bool_t ^ quoted_str_t ^ unquoted_str_t
    # Coerce lists to be lists
    list_t = make_list_t(num_t)
    list_t.set_parse_action(lambda t: [t.as_list()])

    pair = pp.Group(key + EQ + (list_t | scalar))

    return pp.delimited_list(pair, delim=",") + pp.StringEnd()


def grid_grammar() -> pp.ParserElement:
    """``logspace(a, b, n)``, ``linspace(a, b, n)`` or a list ``[v1, v2, ...]``.

    Returns
    -------
    A parsing grammar. Function calls parse to ``[name, a, b, n]``, lists to
    ``["list", v1, v2, ...]``.
    """
    LPAR, RPAR, COMMA = map(pp.Suppress, "(),")

    name = pp.one_of(" ".join(GRID_FUNCTIONS), caseless=True)
    call = name + LPAR + num_t + COMMA + num_t + COMMA + int_t + RPAR
    explicit = make_list_t(num_t)
    explicit.set_parse_action(lambda t: ["list"] + t.as_list())

    return (call | explicit) + pp.StringEnd()

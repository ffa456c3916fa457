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

"""Error-handling facilities."""

from collections import namedtuple
from typing import List

from .utils import location_in_dict

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_NUMERIC_FAILURE = 2
EXIT_UNKNOWN_STRICT = 3


class TaildepError(Exception):
    """Base exception for all errors raised by taildep.

    Attributes
    ----------
    exit_code : int
        Exit code the console script reports for this error.
    """

    exit_code = EXIT_INVALID_INPUT


class UnknownFamily(TaildepError):
    """Distribution family not in the catalog."""


class InvalidParams(TaildepError):
    """Parameter map rejected by the family template."""


class InvalidSpec(TaildepError):
    """Malformed construction spec document."""


class MappingUndefined(TaildepError):
    """No log-transform correspondence exists for a tail class."""


class InvalidGenerator(TaildepError):
    """Archimedean generator inducing an improper radial survival function."""


class NotANorm(TaildepError):
    """Function failing the symmetry or homogeneity probes of a norm."""


class PreconditionViolated(TaildepError):
    pass


class InconsistentSideData(TaildepError):
    """Supplied and derived dependence side data disagree."""


class TooFewExceedances(TaildepError):
    pass


class InvalidK(TaildepError):
    pass


class UnsupportedMDA(TaildepError):
    """Product-tail approximation requested outside its domain."""


class NonConvergent(TaildepError):
    """Quadrature or root finding failed to meet its tolerance."""

    exit_code = EXIT_NUMERIC_FAILURE


class ProfileUnresolved(NonConvergent):
    """Norm profile regression too poor to read off an index."""


class UnknownUnderStrict(TaildepError):
    """A coefficient could not be decided and strict mode was requested."""

    exit_code = EXIT_UNKNOWN_STRICT


class Error(namedtuple("Error", ["address", "message"])):
    """Detailed error reporting for dictionaries.

    Attributes
    ----------
    address : Tuple
         The keys needed to access the offending element in the `dict`.
    message : str
         The error message.
    """

    __slots__ = ()

    def __new__(cls, address=(), message=""):
        return super(Error, cls).__new__(cls, address, message)

    def __eq__(self, other):
        return self.address == other.address and self.message == other.message

    def __hash__(self):
        return hash((self.address, self.message))

    def __repr__(self):
        msg = f"{self.message:s}"
        if self.address != ():
            msg = f"At {location_in_dict(address=self.address):s}:\n  {msg:s}"
        return "- " + msg


def collate_errors(*, when: str, errors: List[Error]) -> str:
    """Collate a list of error into an informative message.

    Parameters
    ----------
    when: str
        When the error occurred.
    errors: List[Error]
        List of errors.

    Returns
    -------
    msg: str
        An error message with details about where in the dictionary the error
        arose and what the error is. For example::

            Error(s) occurred when checking predicates:
            - At user['beta']['shp1']:
              Predicate 'value > 0' not satisfied.
    """
    plural = "s" if len(errors) > 1 else ""
    preamble = f"\nError{plural:s} occurred when {when:s}:"
    msgs = [preamble] + [f"{e}" for e in errors]

    return "\n".join(msgs)

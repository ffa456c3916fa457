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

"""Common utilities."""

import hashlib
import json
import logging
import os
from functools import reduce
from multiprocessing.pool import ThreadPool
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, TypeVar

import numpy as np

JSONDict = Dict[str, Any]

T = TypeVar("T")
U = TypeVar("U")

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 17


class TaildepEncoder(json.JSONEncoder):
    """JSON encoder for numpy scalars and arrays and for taildep records.

    Any object exposing a ``to_json`` method is serialized through it.
    """

    def default(self, obj):
        if hasattr(obj, "to_json"):
            return obj.to_json()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        # Let the base class default method raise the TypeError
        return json.JSONEncoder.default(self, obj)


def location_in_dict(*, address: Tuple, dict_name: str = "user") -> str:
    """Convert tuple of keys of a ``JSONDict`` to its representation in code.

    For example, given ``("a", "b", "c")`` returns the string ``user['a']['b']['c']``.

    Parameters
    ----------
    address : Tuple[str]
    dict_name : str

    Returns
    -------
    where : str
    """
    return reduce(lambda x, y: x + f"['{y}']", address, dict_name)


def nested_set(d: JSONDict, ks: Tuple[Any, ...], v: Any) -> None:
    """Set value in nested dictionary.

    Parameters
    ----------
    d : JSONDict
    ks : Tuple[str]
    v : Any
    """
    for k in ks[:-1]:
        d = d.setdefault(k, {})
    d[ks[-1]] = v


def fingerprint(d: JSONDict) -> str:
    """SHA-256 of the canonical JSON rendering of a dictionary."""
    canonical = json.dumps(d, sort_keys=True, separators=(",", ":"), cls=TaildepEncoder)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def resolve_threads(threads: Optional[int] = None) -> int:
    """Number of worker threads to use.

    Parameters
    ----------
    threads : Optional[int]
        Requested number of threads. ``None`` or non-positive values mean
        all cores.

    Returns
    -------
    n : int
    """
    if threads is None or threads <= 0:
        return os.cpu_count() or 1
    return threads


def map_ordered(
    f: Callable[[T], U], items: Iterable[T], *, threads: Optional[int] = None
) -> List[U]:
    """Apply ``f`` to every item on a thread pool, results in input order.

    Parameters
    ----------
    f : Callable
    items : Iterable
    threads : Optional[int]
        See :func:`resolve_threads`.

    Returns
    -------
    results : List
    """
    items = list(items)
    nthreads = min(resolve_threads(threads), max(len(items), 1))
    if nthreads == 1:
        return [f(x) for x in items]
    logger.debug(f"Mapping {len(items)} items over {nthreads} threads")
    with ThreadPool(processes=nthreads) as pool:
        return pool.map(f, items)

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

from importlib import resources
from pathlib import Path
from typing import Union

import yaml

from .exceptions import InvalidSpec
from .utils import JSONDict


def read_yaml_file(file_name: Union[str, Path]) -> JSONDict:
    """Reads a YAML (or JSON) file and returns it as a dictionary.

    Parameters
    ----------
    file_name: Union[str, Path]
        Path object for the YAML file.

    Returns
    -------
    d: JSONDict
        A dictionary with the contents of the YAML file.

    Raises
    ------
    :exc:`InvalidSpec`
        If the file does not exist, cannot be parsed or is not a mapping.
    """

    file_name = Path(file_name) if isinstance(file_name, str) else file_name

    if not file_name.exists():
        raise InvalidSpec(f"File {file_name} does not exist.")

    with file_name.open("r") as f:
        try:
            d = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise InvalidSpec(f"Could not parse {file_name}:\n{e}") from e

    if not isinstance(d, dict):
        raise InvalidSpec(f"File {file_name} does not hold a mapping.")

    return d


def read_packaged_template(name: str) -> JSONDict:
    """Reads one of the YAML templates shipped in ``taildep/templates``."""
    text = resources.files("taildep").joinpath("templates", name).read_text()
    return yaml.safe_load(text)  # type: ignore[no-any-return]

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

"""Console script for taildep."""

import json
import logging
import sys
from pathlib import Path
from typing import Callable, Optional

import click
import pandas as pd

from . import __version__, api
from .exceptions import EXIT_INVALID_INPUT, EXIT_NUMERIC_FAILURE, EXIT_OK, TaildepError
from .grammars.lexer import parse_grid, parse_params
from .simest import read_batch_csv
from .specio import ConstructionSpec
from .utils import SIGNIFICANT_DIGITS, JSONDict, TaildepEncoder

DEFAULT_Q_GRID = "logspace(-1, -7, 40)"
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"

_FAMILY_FLAGS = (
    "shp",
    "shp1",
    "shp2",
    "scl",
    "loc",
    "rate",
    "mean",
    "theta",
    "skw",
    "lower",
    "upper",
    "mode",
    "value",
)
_MODEL_FLAGS = ("theta", "delta", "alpha", "xi", "rho")


class TaildepGroup(click.Group):
    """Command group translating errors into the documented exit codes.

    0 on success, 1 for invalid input (usage errors included), 2 for
    numeric failures, 3 for undecided coefficients under ``--strict``.
    """

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            rv = super().main(*args, **kwargs)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INVALID_INPUT)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_INVALID_INPUT)
        except TaildepError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(e.exit_code)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _float_flags(names, help_fmt: str) -> Callable:
    def decorator(f):
        for name in reversed(names):
            f = click.option(
                f"--{name}", type=float, default=None, help=help_fmt.format(name)
            )(f)
        return f

    return decorator


def _parameters(flags: JSONDict, params: Optional[str]) -> JSONDict:
    inline = parse_params(params or "")
    given = {k: v for k, v in flags.items() if v is not None}
    clash = sorted(set(inline) & set(given))
    if clash:
        raise click.UsageError(
            f"Parameters given both as flags and in --params: {', '.join(clash)}"
        )
    return {**inline, **given}


def spec_options(f):
    """Options selecting a construction: a spec document or a preset."""
    f = _float_flags(_MODEL_FLAGS, "preset parameter {}")(f)
    f = click.option(
        "--params",
        type=str,
        default=None,
        metavar="<params>",
        help='preset parameters as "key=value, ..."',
    )(f)
    f = click.option(
        "--model",
        type=click.Choice(["model1", "model2", "gaussian_factor"]),
        default=None,
        help="preset construction",
    )(f)
    f = click.option(
        "--spec",
        "spec_file",
        type=click.Path(exists=True, dir_okay=False, resolve_path=True),
        default=None,
        metavar="<spec>",
        help="YAML or JSON spec document",
    )(f)
    return f


def _construction(spec_file, model, params, flags) -> ConstructionSpec:
    if (spec_file is None) == (model is None):
        raise click.UsageError("Give exactly one of --spec and --model")
    if spec_file is not None:
        if params is not None or any(v is not None for v in flags.values()):
            raise click.UsageError("Preset parameters need --model, not --spec")
        return api.load_spec(spec_file)
    return ConstructionSpec.from_preset(model, _parameters(flags, params))


def _pop_flags(kwargs: JSONDict, names) -> JSONDict:
    return {name: kwargs.pop(name) for name in names}


def threads_option(f):
    return click.option(
        "--threads",
        type=int,
        default=None,
        envvar="TAILDEP_THREADS",
        show_envvar=True,
        metavar="<threads>",
        help="worker threads, all cores by default",
    )(f)


def seed_option(f):
    return click.option(
        "--seed", type=int, required=True, metavar="<seed>", help="random seed"
    )(f)


def output_options(f):
    f = click.option(
        "--out",
        type=click.Path(dir_okay=False, resolve_path=True),
        default=None,
        metavar="<out>",
        help="write to file instead of standard output",
    )(f)
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["csv", "json"]),
        default="csv",
        show_default=True,
    )(f)
    return f


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        Path(out).write_text(text)


def _json(d: JSONDict) -> str:
    return json.dumps(d, indent=2, cls=TaildepEncoder)


@click.group(cls=TaildepGroup)
@click.version_option(prog_name="taildep", version=__version__)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
def cli(verbose: int) -> None:
    """Extremal dependence coefficients of X = R (W1, W2)."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


@cli.command()
@click.option("--family", required=True, metavar="<family>", help="catalog family")
@click.option(
    "--params",
    type=str,
    default=None,
    metavar="<params>",
    help='family parameters as "key=value, ..."',
)
@_float_flags(_FAMILY_FLAGS, "family parameter {}")
def classify(family: str, params: Optional[str], **flags) -> None:
    """Tail classes of a parametric family, as JSON."""
    click.echo(_json(api.classify(family, _parameters(flags, params))))


@cli.command()
@spec_options
@click.option("--strict", is_flag=True, help="exit with 3 on undecided coefficients")
@click.option("--seed", type=int, default=None, help="seed of the Monte Carlo fallback")
def coeffs(spec_file, model, params, strict: bool, seed: Optional[int], **kwargs):
    """Symbolic chi and eta of a construction, as JSON."""
    spec = _construction(spec_file, model, params, _pop_flags(kwargs, _MODEL_FLAGS))
    summary = api.coeffs(spec, strict=strict, seed=seed)
    click.echo(_json(summary.to_json()))


@cli.command()
@spec_options
@click.option(
    "--grid",
    type=str,
    default=DEFAULT_Q_GRID,
    show_default=True,
    help="levels q: logspace(a, b, n) in 1 - q, linspace(a, b, n) or [q1, ...]",
)
@click.option("--eta", "with_eta", is_flag=True, help="add eta ratio columns")
@threads_option
@output_options
def curve(spec_file, model, params, grid, with_eta, threads, fmt, out, **kwargs):
    """chi(q) by quadrature over a grid of levels."""
    spec = _construction(spec_file, model, params, _pop_flags(kwargs, _MODEL_FLAGS))
    frame, doc = api.curve(
        spec, parse_grid(grid, context="q"), with_eta=with_eta, threads=threads
    )
    if fmt == "json":
        _emit(_json(doc), out)
    else:
        _emit(frame.to_csv(index=False, float_format=FLOAT_FORMAT), out)


@cli.command()
@spec_options
@click.option("-n", "--n", "n", type=int, required=True, help="number of draws")
@seed_option
@threads_option
@output_options
def simulate(spec_file, model, params, n, seed, threads, fmt, out, **kwargs):
    """Seeded draws of a construction."""
    spec = _construction(spec_file, model, params, _pop_flags(kwargs, _MODEL_FLAGS))
    batch = api.simulate(spec, n, seed, threads=threads)
    if fmt == "json":
        _emit(_json({"seed": seed, "pairs": batch.pairs.tolist()}), out)
    else:
        _emit(batch.to_csv(), out)


@cli.command()
@click.option(
    "--sample",
    "sample_file",
    type=click.Path(exists=True, dir_okay=False, resolve_path=True),
    default=None,
    help="CSV file with columns x1, x2",
)
@spec_options
@click.option("-n", "--n", "n", type=int, default=None, help="number of draws")
@click.option("--seed", type=int, default=None, help="random seed")
@click.option("--q", type=float, default=0.99, show_default=True, help="level of chi")
@click.option("--k", type=int, default=None, help="Hill order statistics")
@threads_option
@output_options
def estimate(
    sample_file, spec_file, model, params, n, seed, q, k, threads, fmt, out, **kwargs
):
    """Empirical chi(q) and Hill eta from a sample file or fresh draws."""
    flags = _pop_flags(kwargs, _MODEL_FLAGS)
    if sample_file is not None:
        if spec_file is not None or model is not None:
            raise click.UsageError("Give either --sample or a construction")
        batch = read_batch_csv(sample_file)
    else:
        if n is None or seed is None:
            raise click.UsageError("Drawing a sample needs --n and --seed")
        spec = _construction(spec_file, model, params, flags)
        batch = api.simulate(spec, n, seed, threads=threads)
    result = api.estimate(batch, q=q, k=k)
    if fmt == "json":
        _emit(_json(result), out)
    else:
        frame = pd.DataFrame([result])
        _emit(frame.to_csv(index=False, float_format=FLOAT_FORMAT), out)


@cli.command()
@spec_options
@click.option("-n", "--n", "n", type=int, required=True, help="number of draws")
@seed_option
@click.option("--q", type=float, default=0.999, show_default=True, help="level of chi")
@click.option("--k", type=int, default=None, help="Hill order statistics")
@threads_option
@click.option(
    "--out",
    type=click.Path(dir_okay=False, resolve_path=True),
    default=None,
    help="write to file instead of standard output",
)
def verify(spec_file, model, params, n, seed, q, k, threads, out, **kwargs):
    """Check symbolic coefficients against a fresh sample.

    Exits with 2 when a check fails.
    """
    spec = _construction(spec_file, model, params, _pop_flags(kwargs, _MODEL_FLAGS))
    report = api.verify(spec, n=n, q=q, seed=seed, k=k, threads=threads)
    _emit(_json(report.to_json()), out)
    return EXIT_OK if report.passed else EXIT_NUMERIC_FAILURE

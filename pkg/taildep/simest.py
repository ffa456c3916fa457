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

"""Monte Carlo sampling of constructions and empirical tail dependence."""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from scipy import stats

from .depcalc import Defined, DependenceSummary
from .exceptions import (
    InvalidK,
    InvalidSpec,
    NonConvergent,
    PreconditionViolated,
    TooFewExceedances,
)
from .quadeval import chi_point
from .specio import ConstructionSpec
from .utils import JSONDict, SIGNIFICANT_DIGITS, map_ordered

logger = logging.getLogger(__name__)

SAMPLE_BLOCK = 65536
MIN_EXCEEDANCES = 50
MIN_K = 10
HILL_K_EXPONENT = 0.6
CHI_SIGMAS = 4.0
ETA_SIGMAS = 3.0
ETA_MIN_TOL = 0.05


@dataclass(frozen=True, eq=False)
class SampleBatch:
    """Draws of ``(X1, X2)``, one row per draw."""

    pairs: np.ndarray
    seed: Optional[int]
    fingerprint: str

    @property
    def n(self) -> int:
        return int(self.pairs.shape[0])

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.pairs, columns=["x1", "x2"])

    def to_csv(self, path: Optional[Union[str, Path]] = None) -> Optional[str]:
        return self.frame().to_csv(
            path, index=False, float_format=f"%.{SIGNIFICANT_DIGITS}g"
        )


def read_batch_csv(path: Union[str, Path]) -> SampleBatch:
    """Read pairs from a CSV file with columns ``x1`` and ``x2``.

    Raises
    ------
    :exc:`InvalidSpec`
    """
    try:
        df = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InvalidSpec(f"Cannot read sample file {path}: {e}")
    if not {"x1", "x2"}.issubset(df.columns):
        raise InvalidSpec(f"Sample file {path} needs columns x1 and x2")
    pairs = df[["x1", "x2"]].to_numpy(dtype=float)
    if not np.all(np.isfinite(pairs)):
        raise InvalidSpec(f"Sample file {path} holds non-finite values")
    return SampleBatch(pairs=pairs, seed=None, fingerprint=f"file:{Path(path).name}")


def block_generator(seed: int, block: int) -> np.random.Generator:
    """Philox stream of one sampling block."""
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,)))
    )


def _sample_block(spec: ConstructionSpec, seed: int, block: int, size: int):
    rng = block_generator(seed, block)
    r = np.asarray(spec.radial.sample(rng, size), dtype=float)
    w = spec.angular.sample(rng, size)
    return r[:, None] * w


def sample(
    spec: ConstructionSpec, n: int, seed: int, *, threads: Optional[int] = None
) -> SampleBatch:
    """``n`` draws of ``R (W1, W2)``.

    Draws come in blocks of :data:`SAMPLE_BLOCK`, each from its own
    generator, so the batch does not depend on the number of threads.
    """
    if n < 1:
        raise PreconditionViolated(f"Sample size must be >= 1, got {n}")
    sizes = [SAMPLE_BLOCK] * (n // SAMPLE_BLOCK)
    if n % SAMPLE_BLOCK:
        sizes.append(n % SAMPLE_BLOCK)
    logger.info(f"Sampling {n} pairs in {len(sizes)} blocks with seed {seed}")
    blocks = map_ordered(
        lambda job: _sample_block(spec, seed, *job),
        list(enumerate(sizes)),
        threads=threads,
    )
    return SampleBatch(pairs=np.vstack(blocks), seed=seed, fingerprint=spec.fingerprint)


def pseudo_observations(batch: SampleBatch) -> np.ndarray:
    """Ranks of each margin rescaled to ``(0, 1)``."""
    return stats.rankdata(batch.pairs, axis=0) / (batch.n + 1.0)


def empirical_chi(batch: SampleBatch, q: float) -> Tuple[float, float]:
    """Rank-based estimate of ``chi(q)`` and its binomial standard error.

    The standard error uses the joint exceedance proportion with one
    exceedance and one non-exceedance added. It is positive for estimates
    of 0 and 1.

    Raises
    ------
    :exc:`TooFewExceedances`
        If fewer than 50 exceedances are expected.
    """
    if not 0 < q < 1:
        raise PreconditionViolated(f"q must be in (0, 1), got {q}")
    n = batch.n
    if n * (1.0 - q) < MIN_EXCEEDANCES:
        raise TooFewExceedances(
            f"n (1 - q) = {n * (1.0 - q):g} is below {MIN_EXCEEDANCES}"
        )
    u = pseudo_observations(batch)
    joint = int(np.count_nonzero((u[:, 0] > q) & (u[:, 1] > q)))
    expected = n * (1.0 - q)
    estimate = float(joint / n / (1.0 - q))
    p = min((joint + 1.0) / (expected + 2.0), 1.0)
    std_err = math.sqrt(p * (1.0 - p) / expected)
    return estimate, std_err


def default_k(n: int) -> int:
    return int(math.floor(n**HILL_K_EXPONENT))


def hill_eta(batch: SampleBatch, k: Optional[int] = None) -> Tuple[float, float]:
    """Hill estimate of ``eta`` from the ``k`` largest values of
    ``T = min(1 / (1 - U1), 1 / (1 - U2))``.

    Raises
    ------
    :exc:`InvalidK`
        Unless ``10 <= k <= n / 2``.
    """
    n = batch.n
    k = default_k(n) if k is None else k
    if not MIN_K <= k <= n / 2:
        raise InvalidK(f"k must be in [{MIN_K}, n / 2 = {n / 2:g}], got {k}")
    u = pseudo_observations(batch)
    t = np.sort(np.min(1.0 / (1.0 - u), axis=1))
    top, threshold = t[n - k :], t[n - k - 1]
    estimate = float(np.mean(np.log(top / threshold)))
    return estimate, estimate / math.sqrt(k)


# Verification against symbolic values.


@dataclass(frozen=True)
class Check:
    name: str
    symbolic: Optional[float]
    estimate: Optional[float] = None
    std_err: Optional[float] = None
    tolerance: Optional[float] = None
    status: str = "skipped"
    chi_q: Optional[float] = None
    distance: Optional[float] = None
    note: str = ""

    def to_json(self) -> JSONDict:
        return {
            "name": self.name,
            "symbolic": self.symbolic,
            "estimate": self.estimate,
            "std_err": self.std_err,
            "tolerance": self.tolerance,
            "status": self.status,
            "chi_q": self.chi_q,
            "distance": self.distance,
            "note": self.note,
        }


@dataclass(frozen=True)
class VerifyReport:
    fingerprint: str
    n: int
    seed: int
    q: float
    k: int
    checks: Tuple[Check, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self) -> JSONDict:
        return {
            "fingerprint": self.fingerprint,
            "n": self.n,
            "seed": self.seed,
            "q": self.q,
            "k": self.k,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _judge(estimate: float, target: float, tolerance: float) -> str:
    return "pass" if abs(estimate - target) <= tolerance else "fail"


def _chi_checks(
    spec: ConstructionSpec, batch: SampleBatch, symbolic: DependenceSummary, q: float
) -> List[Check]:
    if not isinstance(symbolic.chi, Defined):
        return [Check("chi", None, note=f"symbolic chi is {symbolic.chi.to_json()}")]
    target = symbolic.chi.value
    estimate, std_err = empirical_chi(batch, q)
    tolerance = CHI_SIGMAS * std_err
    try:
        chi_q, _ = chi_point(spec, q)
    except NonConvergent as e:
        logger.warning(f"No quadrature chi at q = {q}: {e}")
        chi_q = None
    checks = [
        Check(
            "chi",
            target,
            estimate,
            std_err,
            tolerance,
            _judge(estimate, target, tolerance),
            chi_q,
            None if chi_q is None else abs(chi_q - target),
        )
    ]
    if chi_q is not None:
        checks.append(
            Check(
                "chi_q",
                chi_q,
                estimate,
                std_err,
                tolerance,
                _judge(estimate, chi_q, tolerance),
                note="empirical against quadrature at the same level",
            )
        )
    return checks


def _eta_check(batch: SampleBatch, symbolic: DependenceSummary, k: int) -> Check:
    if not isinstance(symbolic.eta, Defined):
        return Check("eta", None, note=f"symbolic eta is {symbolic.eta.to_json()}")
    target = symbolic.eta.value
    estimate, std_err = hill_eta(batch, k)
    tolerance = max(ETA_SIGMAS * std_err, ETA_MIN_TOL)
    return Check(
        "eta", target, estimate, std_err, tolerance, _judge(estimate, target, tolerance)
    )


def verify(
    spec: ConstructionSpec,
    symbolic: DependenceSummary,
    *,
    n: int,
    q: float,
    seed: int,
    k: Optional[int] = None,
    threads: Optional[int] = None,
) -> VerifyReport:
    """Compare symbolic coefficients with estimates from a fresh sample.

    ``chi`` is compared at level ``q`` within four standard errors, with the
    quadrature ``chi(q)`` and its distance to the limit reported alongside.
    ``eta`` is compared within three standard errors or 0.05.
    """
    batch = sample(spec, n, seed, threads=threads)
    k = default_k(n) if k is None else k
    checks = _chi_checks(spec, batch, symbolic, q)
    checks.append(_eta_check(batch, symbolic, k))
    report = VerifyReport(spec.fingerprint, n, seed, q, k, tuple(checks))
    for c in checks:
        logger.info(f"Check {c.name}: {c.status}")
    return report

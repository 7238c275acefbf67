# Copyright (c) 2026 insep developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Ensemble survey over uniformly random Bell-diagonal states

Every sample is pushed through all criteria at once (vectorized), and the
criteria that must agree on these states are compared: octahedron, spectrum,
``N <= 1``, flip overlaps, the alpha = inf entropy inequality and
purifiability.
"""
import csv
import dataclasses
import logging
import typing

import numpy as np

from . import entropy, separability
from .sampling import SeededGenerator, check_count, uniform_bell_spectra
from .util import MARGIN, INF

logger = logging.getLogger(__name__)

BLOCK_SIZE: int = 65536

CSV_COLUMNS: typing.Tuple[str, ...] = (
    'p0',
    'p1',
    'p2',
    'p3',
    'l1_norm',
    'n_value',
    'p_max',
    'separable',
    'useful',
    'alpha1_violated',
    'alpha2_violated',
    'alpha_inf_violated',
)


@dataclasses.dataclass(frozen=True)
class SurveyResult:
    """Summary of a survey

    Attributes:
        n (int): Number of samples
        seed (int): Seed of the generator
        separable_fraction (float): Fraction inside the octahedron
        useful_fraction (float): Fraction with ``N > 1``
        purifiable_fraction (float): Fraction with fully entangled fraction above 1/2
        alpha1_violating_fraction (float): Fraction violating the alpha = 1 inequality
        alpha2_violating_fraction (float): Fraction violating the alpha = 2 inequality
        alpha_inf_violating_fraction (float): Fraction violating the alpha = inf inequality
        disagreements (int): Samples (off the boundary) where criteria that must agree do not
        boundary (int): Samples too close to the boundary to compare criteria
        samples (typing.Optional[np.ndarray]): Per-sample rows (``CSV_COLUMNS``), when kept
    """

    n: int
    seed: int
    separable_fraction: float
    useful_fraction: float
    purifiable_fraction: float
    alpha1_violating_fraction: float
    alpha2_violating_fraction: float
    alpha_inf_violating_fraction: float
    disagreements: int
    boundary: int
    samples: typing.Optional[np.ndarray] = dataclasses.field(default=None, compare=False, repr=False)

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        result = dataclasses.asdict(self)
        del result['samples']
        return result


def violates(spectra: np.ndarray, alpha: float) -> np.ndarray:
    """Mask of the Bell spectra violating the alpha-entropy inequality (both reductions have entropy ln 2)"""
    return entropy.renyi_of_spectra(spectra, alpha) - entropy.LN2 < -MARGIN


def _survey_block(spectra: np.ndarray) -> typing.Tuple[typing.Dict[str, int], np.ndarray]:
    criteria = separability.batch_criteria(spectra)
    separable = criteria.octahedron
    useful = criteria.n_value > 1 + MARGIN
    purifiable = criteria.p_max > 0.5 + MARGIN
    alpha1 = violates(spectra, 1.0)
    alpha2 = violates(spectra, 2.0)
    alpha_inf = violates(spectra, INF)

    inseparable = ~separable
    chained = (alpha_inf != inseparable) | (useful != inseparable) | (purifiable != inseparable)
    mismatched = criteria.disagreements() | (~criteria.boundary & chained)

    counts = {
        'separable': int(np.sum(separable)),
        'useful': int(np.sum(useful)),
        'purifiable': int(np.sum(purifiable)),
        'alpha1': int(np.sum(alpha1)),
        'alpha2': int(np.sum(alpha2)),
        'alpha_inf': int(np.sum(alpha_inf)),
        'disagreements': int(np.sum(mismatched)),
        'boundary': int(np.sum(criteria.boundary)),
    }
    rows = np.column_stack(
        [spectra, criteria.l1_norm, criteria.n_value, criteria.p_max, separable, useful, alpha1, alpha2, alpha_inf]
    )
    return counts, rows


def survey(n: int, generator: typing.Optional[SeededGenerator] = None, keep_samples: bool = False) -> SurveyResult:
    """Samples n uniform Bell spectra and tallies every criterion

    Samples are drawn in blocks of ``BLOCK_SIZE``, each from its own stream, so
    the result only depends on the seed and n.

    Raises:
        exceptions.InvalidCountError: If n < 1
    """
    n = check_count(n, 'n')
    gen = generator if generator is not None else SeededGenerator()
    root = gen.spawn()

    totals: typing.Dict[str, int] = {}
    kept: typing.List[np.ndarray] = []
    for index, start in enumerate(range(0, n, BLOCK_SIZE)):
        spectra = uniform_bell_spectra(root.split(index), min(BLOCK_SIZE, n - start))
        counts, rows = _survey_block(spectra)
        for key, value in counts.items():
            totals[key] = totals.get(key, 0) + value
        if keep_samples:
            kept.append(rows)
        logger.debug('Survey block %d done (%d samples)', index, len(spectra))

    if totals['disagreements']:
        logger.warning('Survey found %d criterion disagreements', totals['disagreements'])

    return SurveyResult(
        n=n,
        seed=gen.seed,
        separable_fraction=totals['separable'] / n,
        useful_fraction=totals['useful'] / n,
        purifiable_fraction=totals['purifiable'] / n,
        alpha1_violating_fraction=totals['alpha1'] / n,
        alpha2_violating_fraction=totals['alpha2'] / n,
        alpha_inf_violating_fraction=totals['alpha_inf'] / n,
        disagreements=totals['disagreements'],
        boundary=totals['boundary'],
        samples=np.concatenate(kept) if keep_samples else None,
    )


def write_csv(result: SurveyResult, stream: typing.TextIO) -> None:
    """Writes the per-sample rows of a survey run with ``keep_samples``"""
    if result.samples is None:
        raise ValueError('Survey was run without keep_samples')
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in result.samples:
        values = [repr(float(x)) for x in row[:7]] + [str(bool(x)).lower() for x in row[7:]]
        writer.writerow(values)

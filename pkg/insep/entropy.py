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
Quantum Rényi alpha-entropies and the alpha-entropy inequalities

``S_alpha(rho) = ln Tr(rho^alpha) / (1 - alpha)`` for alpha > 1, the von
Neumann entropy at alpha = 1 and ``-ln lambda_max`` at alpha = inf. All values
are in nats.

A state satisfies the alpha-entropy inequality when the whole is at least as
disordered as each of its parts, ``S_alpha(rho) >= max(S_alpha(rho_1), S_alpha(rho_2))``,
that is, when both conditional entropies are nonnegative. Separable states
satisfy it for alpha = 1 and 2.
"""
import dataclasses
import logging
import math
import typing

import numpy as np
from scipy import optimize, special

from . import exceptions, linalg
from .state import DensityMatrix, BellSpectrum, qubit_state
from .util import INF, MARGIN, Tolerances, ensure_alpha, is_alpha, format_alpha

logger = logging.getLogger(__name__)

# Eigenvalues in [-CLIP_TOL, 0) are rounding noise and are set to zero
CLIP_TOL: float = 1e-10

LN2: float = math.log(2.0)


@dataclasses.dataclass(frozen=True)
class AlphaEntropyVerdict:
    """Outcome of the alpha-entropy inequality test for one alpha

    Attributes:
        alpha (float): Entropy order (``math.inf`` for the min-entropy)
        s_total (float): Entropy of the whole state
        s_sub1 (float): Entropy of the first reduction
        s_sub2 (float): Entropy of the second reduction
        conditional_1given2 (float): ``s_total - s_sub2``
        conditional_2given1 (float): ``s_total - s_sub1``
        satisfied (bool): Both conditional entropies are >= -MARGIN
    """

    alpha: float
    s_total: float
    s_sub1: float
    s_sub2: float
    conditional_1given2: float
    conditional_2given1: float
    satisfied: bool

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        result = dataclasses.asdict(self)
        result['alpha'] = format_alpha(self.alpha) if math.isinf(self.alpha) else self.alpha
        return result


def _clean_spectrum(values: typing.Any, tol: float = CLIP_TOL) -> np.ndarray:
    spectrum = np.asarray(values, dtype=float).reshape(-1)
    lowest = float(np.min(spectrum))
    if lowest < -tol:
        raise exceptions.NotPositiveError(f'Spectrum has negative eigenvalue {lowest:.3g}', -lowest)
    if lowest < 0:
        logger.debug('Clipping eigenvalue %g to zero', lowest)
    return np.clip(spectrum, 0.0, None)


def _renyi(spectrum: np.ndarray, alpha: float) -> float:
    alpha = float(alpha)
    if math.isinf(alpha):
        return -math.log(float(np.max(spectrum)))
    if alpha == 1.0:
        return float(np.sum(special.entr(spectrum)))
    with np.errstate(divide='ignore'):
        logs = np.log(spectrum)
    return float(special.logsumexp(alpha * logs) / (1.0 - alpha))


@ensure_alpha
def renyi_of_spectrum(values: typing.Any, alpha: float) -> float:
    """Rényi alpha-entropy of a probability vector (nats)

    Args:
        values (typing.Any): Eigenvalues (or probabilities)
        alpha (float): Order, >= 1 or ``math.inf``

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1
        exceptions.NotPositiveError: If a value is below -CLIP_TOL
    """
    return _renyi(_clean_spectrum(values), alpha)


@ensure_alpha
def renyi_of_spectra(values: np.ndarray, alpha: float) -> np.ndarray:
    """Row-wise :func:`renyi_of_spectrum` of an ``(n, d)`` array of probability vectors"""
    spectra = np.clip(np.asarray(values, dtype=float), 0.0, None)
    alpha = float(alpha)
    if math.isinf(alpha):
        return -np.log(np.max(spectra, axis=-1))
    if alpha == 1.0:
        return np.sum(special.entr(spectra), axis=-1)
    with np.errstate(divide='ignore'):
        logs = np.log(spectra)
    return special.logsumexp(alpha * logs, axis=-1) / (1.0 - alpha)


def _spectrum_of(rho: typing.Union[DensityMatrix, np.ndarray]) -> typing.Tuple[np.ndarray, float]:
    """Eigenvalues of a state and the negativity its tolerances allow"""
    if not isinstance(rho, DensityMatrix):
        shape = np.shape(rho)
        if shape == (2, 2):
            return linalg.eigvalsh(qubit_state(rho)), max(CLIP_TOL, Tolerances.INGEST.psd)
        if shape != (4, 4):
            raise exceptions.InvalidStateError(f'Expected a 2x2 or 4x4 density matrix, got shape {shape}')
        rho = DensityMatrix.from_matrix(rho)
    return rho.spectrum(), max(CLIP_TOL, rho.tolerances.psd)


@ensure_alpha
def renyi(rho: typing.Union[DensityMatrix, np.ndarray], alpha: float) -> float:
    """Rényi alpha-entropy of a 2x2 or 4x4 density matrix (nats)

    Raw arrays are validated as states first. The clipped spectrum is renormalized.

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1
        exceptions.InvalidStateError: (or a subclass) If a raw array is not a density matrix
    """
    spectrum, tol = _spectrum_of(rho)
    spectrum = _clean_spectrum(spectrum, tol)
    return _renyi(spectrum / np.sum(spectrum), alpha)


@ensure_alpha
def conditional(rho: DensityMatrix, alpha: float, which: int) -> float:
    """Conditional alpha-entropy

    ``S(1|2) = S(rho) - S(rho_2)`` for which=1, ``S(2|1) = S(rho) - S(rho_1)`` for which=2.

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1
        exceptions.OutOfRangeError: If which is not 1 or 2
    """
    if which not in (1, 2):
        raise exceptions.OutOfRangeError(f'Invalid conditional entropy index {which}')
    other = 2 if which == 1 else 1
    return renyi(rho, alpha) - renyi(rho.reduce(other), alpha)


@ensure_alpha
def check_inequality(rho: DensityMatrix, alpha: float) -> AlphaEntropyVerdict:
    """Evaluates ``S_alpha(rho) >= max_i S_alpha(rho_i)``

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1
    """
    s_total = renyi(rho, alpha)
    s_sub1 = renyi(rho.reduce(1), alpha)
    s_sub2 = renyi(rho.reduce(2), alpha)
    cond_12 = s_total - s_sub2
    cond_21 = s_total - s_sub1
    return AlphaEntropyVerdict(
        alpha=float(alpha),
        s_total=s_total,
        s_sub1=s_sub1,
        s_sub2=s_sub2,
        conditional_1given2=cond_12,
        conditional_2given1=cond_21,
        satisfied=bool(cond_12 >= -MARGIN and cond_21 >= -MARGIN),
    )


@ensure_alpha
def batch_conditionals(matrices: np.ndarray, alpha: float) -> np.ndarray:
    """Conditional alpha-entropies of an ``(n, 4, 4)`` stack of density matrices

    Returns:
        np.ndarray: ``(n, 2)`` array, columns ``S(1|2)`` and ``S(2|1)`` as in :func:`conditional`
    """
    stack = np.asarray(matrices, dtype=complex)
    if stack.ndim != 3 or stack.shape[1:] != (4, 4):
        raise exceptions.InvalidStateError(f'Expected an (n, 4, 4) stack, got shape {stack.shape}')
    tensor = stack.reshape(-1, 2, 2, 2, 2)
    s_total = renyi_of_spectra(np.linalg.eigvalsh(stack), alpha)
    s_sub1 = renyi_of_spectra(np.linalg.eigvalsh(np.einsum('nijkj->nik', tensor)), alpha)
    s_sub2 = renyi_of_spectra(np.linalg.eigvalsh(np.einsum('nijil->njl', tensor)), alpha)
    return np.stack([s_total - s_sub2, s_total - s_sub1], axis=1)


@ensure_alpha
def tstate_inequality(p: typing.Union[BellSpectrum, typing.Sequence[float]], alpha: float) -> bool:
    """alpha-entropy inequality of a state with maximally disordered subsystems

    Both reductions have entropy ln 2, so the inequality reduces to
    ``sum_i p_i^alpha <= 2^(1 - alpha)`` (alpha > 1), ``-sum_i p_i ln p_i >= ln 2``
    (alpha = 1) and ``p_max <= 1/2`` (alpha = inf). It is evaluated in its
    logarithmic form so the margin matches :func:`check_inequality`.

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1
        exceptions.InvalidSpectrumError: If p is not a probability vector
    """
    spectrum = p if isinstance(p, BellSpectrum) else BellSpectrum(np.asarray(p, dtype=float))
    return bool(renyi_of_spectrum(spectrum.p, alpha) - LN2 >= -MARGIN)


def violation_scan(rho: DensityMatrix, alphas: typing.Iterable[float]) -> typing.List[AlphaEntropyVerdict]:
    """Checks the inequality for every requested alpha, always including alpha = inf

    For states with maximally disordered subsystems the inf verdict decides the
    whole family: it is violated iff some alpha is, iff ``p_max > 1/2``.

    Raises:
        exceptions.InvalidAlphaError: If any alpha < 1
    """
    requested = list(alphas)
    for alpha in requested:
        if not is_alpha(alpha):
            raise exceptions.InvalidAlphaError(f'Invalid alpha {alpha!r}: must be >= 1 or inf')
    values = [float(a) for a in requested]
    if not any(math.isinf(a) for a in values):
        values.append(INF)
    return [check_inequality(rho, alpha) for alpha in values]


def werner_spectrum(p: float) -> np.ndarray:
    """Spectrum ``((1 + 3p)/4, (1 - p)/4, (1 - p)/4, (1 - p)/4)`` of the Werner state"""
    if not 0.0 <= p <= 1.0:
        raise exceptions.OutOfRangeError(f'Werner weight {p} outside [0, 1]')
    low = (1.0 - p) / 4.0
    return np.array([(1.0 + 3.0 * p) / 4.0, low, low, low])


def werner_threshold(alpha: float, xtol: float = 1e-12) -> float:
    """Werner weight p* above which the alpha-entropy inequality is violated

    Root of ``S_alpha(rho_W(p)) = ln 2``. Closed forms for alpha = 2 (``1/√3``)
    and alpha = inf (``1/3``); bisection otherwise.

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1
    """
    if not is_alpha(alpha):
        raise exceptions.InvalidAlphaError(f'Invalid alpha {alpha!r}: must be >= 1 or inf')
    alpha = float(alpha)
    if math.isinf(alpha):
        return 1.0 / 3.0
    if alpha == 2.0:
        return 1.0 / math.sqrt(3.0)

    def excess(p: float) -> float:
        return renyi_of_spectrum(werner_spectrum(p), alpha) - LN2

    # excess(1/3) >= 0 (separable) and excess(1) = -ln 2
    return float(optimize.bisect(excess, 1.0 / 3.0, 1.0, xtol=xtol))

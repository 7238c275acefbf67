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
Separability criteria

A state with diagonal T is identified with the vector ``t`` of that diagonal.
Valid states fill the tetrahedron spanned by the Bell vertices, and the
separable ones among the states with maximally disordered subsystems
(T-states) fill the octahedron ``|t1| + |t2| + |t3| <= 1``. For T-states this
is the same as every eigenvalue being at most 1/2.

For general states only necessary conditions are available, so a state that
passes them all is reported as :attr:`Verdict.INCONCLUSIVE`.

Example:
    >>> from insep import separability, state
    >>> separability.classify(state.DensityMatrix.werner(0.5)).verdict
    Verdict.INSEPARABLE
    >>> separability.in_octahedron([1/3, 1/3, 1/3])
    True
"""
import dataclasses
import enum
import functools
import logging
import typing

import numpy as np

from . import entropy, exceptions, frame
from .state import DensityMatrix, BellBasis, PAULI, PAULI_PRODUCTS
from .util import MARGIN, TSTATE_TOL, ensure_tstate, frozen, as_vector

if typing.TYPE_CHECKING:
    from .teleport import TeleportReport

logger = logging.getLogger(__name__)

# Criteria closer than this to their threshold are not compared against each other
BOUNDARY_BAND: float = 10 * MARGIN

# Entropy orders checked as necessary conditions on general states
NECESSARY_ALPHAS: typing.Tuple[float, ...] = (1.0, 2.0)


class Verdict(enum.Enum):
    """Outcome of the separability classification"""

    SEPARABLE = 'separable'
    INSEPARABLE = 'inseparable'
    INCONCLUSIVE = 'inconclusive'

    @staticmethod
    def from_string(name: str) -> 'Verdict':
        """Returns a Verdict from its name

        Args:
            name (str): Name of the verdict (case insensitive)

        Raises:
            KeyError: If the name is not a valid Verdict
        """
        return Verdict[name.upper()]

    def __str__(self) -> str:
        return f'Verdict.{self.name}'

    def __repr__(self) -> str:
        return self.__str__()


@dataclasses.dataclass(frozen=True)
class TVector:
    """Diagonal ``(t1, t2, t3)`` of a diagonal correlation matrix"""

    t: np.ndarray

    def __post_init__(self) -> None:
        vec = as_vector(self.t, 3, 't')
        if np.max(np.abs(vec)) > 1 + MARGIN:
            raise exceptions.OutOfRangeError(f't entries must lie in [-1, 1], got {vec.tolist()}')
        object.__setattr__(self, 't', frozen(vec))

    @property
    def l1_norm(self) -> float:
        return float(np.sum(np.abs(self.t)))

    @staticmethod
    def of(rho: DensityMatrix) -> 'TVector':
        """Canonical diagonal of a state"""
        return TVector(frame.canonicalize(rho).diag)

    def __str__(self) -> str:
        return f'TVector({self.t.tolist()})'

    def __repr__(self) -> str:
        return self.__str__()


def _as_t(t: typing.Union[TVector, typing.Any]) -> np.ndarray:
    return t.t if isinstance(t, TVector) else as_vector(t, 3, 't')


def tetrahedron_slack(t: typing.Union[TVector, typing.Any]) -> np.ndarray:
    """``1 + (t_i, t)`` for the four Bell vertices, that is four times the Bell weights"""
    return 1.0 + BellBasis.VERTICES @ _as_t(t)


def in_tetrahedron(t: typing.Union[TVector, typing.Any]) -> bool:
    """True if t lies in the tetrahedron of valid states with r = s = 0 (boundary included)"""
    return bool(np.min(tetrahedron_slack(t)) >= -MARGIN)


def in_octahedron(t: typing.Union[TVector, typing.Any]) -> bool:
    """True if ``|t1| + |t2| + |t3| <= 1`` (boundary included)"""
    return bool(np.sum(np.abs(_as_t(t))) <= 1 + MARGIN)


@functools.lru_cache(maxsize=None)
def flip_operator(index: int) -> np.ndarray:
    """``V_i = (σ_i ⊗ I) V (σ_i ⊗ I)``, with V the flip (swap) of the two qubits

    ``V_0`` is V itself. Every ``V_i`` equals ``1/2 (I - sum_j (t_i)_j σ_j ⊗ σ_j)``
    with ``t_i`` the Bell vertex of index i.

    Raises:
        exceptions.OutOfRangeError: If index is not in 0..3
    """
    if index not in (0, 1, 2, 3):
        raise exceptions.OutOfRangeError(f'Invalid flip index {index}')
    swap = sum(PAULI_PRODUCTS[j, j] for j in range(4)) / 2
    local = np.kron(PAULI[index], PAULI[0])
    return frozen(local @ swap @ local, dtype=complex)


def flip_overlaps(rho: DensityMatrix) -> np.ndarray:
    """``(Tr V_0 rho, ..., Tr V_3 rho)`` from the explicit 4x4 operators

    Separable states have all four overlaps nonnegative.
    """
    return frozen([np.trace(flip_operator(i) @ rho.matrix).real for i in range(4)])


def flip_overlaps_from_t(t: typing.Union[TVector, typing.Any]) -> np.ndarray:
    """``Tr V_i rho = 1/2 (1 - (t_i, t))`` where t is the diagonal of T"""
    return frozen((1.0 - BellBasis.VERTICES @ _as_t(t)) / 2)


@ensure_tstate
def spectral_separable(rho: DensityMatrix) -> bool:
    """A T-state is separable iff its spectrum lies in [0, 1/2]

    The spectrum read is that of the Bell-diagonal canonical form, so reductions
    within ``TSTATE_TOL`` of maximally mixed do not shift it.

    Raises:
        exceptions.NotTStateError: If ``|r|`` or ``|s|`` is above ``TSTATE_TOL``
    """
    return bool(rho.bell_spectrum().p_max <= 0.5 + MARGIN)


def is_pure_product(rho: DensityMatrix) -> bool:
    """True if rho is rank one with pure reductions"""
    hs = rho.to_hs()
    return bool(
        rho.spectrum()[1] <= MARGIN
        and np.linalg.norm(hs.r) >= 1 - TSTATE_TOL
        and np.linalg.norm(hs.s) >= 1 - TSTATE_TOL
    )


@dataclasses.dataclass(frozen=True)
class SeparabilityReport:
    """All separability criteria of one state

    Attributes:
        is_t_state (bool): Both reductions maximally mixed
        in_tetrahedron (bool): Canonical t inside the tetrahedron
        l1_norm (float): ``|t1| + |t2| + |t3|`` of the canonical t
        in_octahedron (bool): ``l1_norm <= 1``
        max_eigenvalue (float): Largest eigenvalue of the state (largest Bell weight for T-states)
        flip_overlaps (np.ndarray): ``Tr V_i rho`` of the canonical state
        verdict (Verdict): Combined verdict
        violations (typing.Tuple[str, ...]): Necessary conditions that failed
    """

    is_t_state: bool
    in_tetrahedron: bool
    l1_norm: float
    in_octahedron: bool
    max_eigenvalue: float
    flip_overlaps: np.ndarray
    verdict: Verdict
    violations: typing.Tuple[str, ...] = ()

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            'is_t_state': self.is_t_state,
            'in_tetrahedron': self.in_tetrahedron,
            'l1_norm': self.l1_norm,
            'in_octahedron': self.in_octahedron,
            'max_eigenvalue': self.max_eigenvalue,
            'flip_overlaps': [float(x) for x in self.flip_overlaps],
            'verdict': self.verdict.name,
            'violations': list(self.violations),
        }


def _necessary_violations(rho: DensityMatrix, canonical: frame.CanonicalForm, flips: np.ndarray) -> typing.List[str]:
    violations = []
    for alpha in NECESSARY_ALPHAS:
        if not entropy.check_inequality(rho, alpha).satisfied:
            violations.append(f'entropy_alpha_{alpha:g}')
    if np.min(flips) < -MARGIN:
        violations.append('flip_overlap')
    if not in_tetrahedron(canonical.diag):
        violations.append('tetrahedron')
    # N > 1 means fidelity above the classical 2/3, impossible for separable states
    if float(np.sum(np.abs(canonical.diag))) > 1 + MARGIN:
        violations.append('teleportation')
    return violations


def classify(rho: DensityMatrix) -> SeparabilityReport:
    """Runs every criterion on rho and combines them into a verdict

    T-states are decided exactly by the octahedron. Other states are
    INSEPARABLE when a necessary condition fails (alpha = 1, 2 entropy
    inequalities, flip overlaps, tetrahedron, N <= 1), SEPARABLE when they are
    a pure product, and INCONCLUSIVE otherwise.
    """
    canonical = frame.canonicalize(rho)
    diag = canonical.diag
    t_state = rho.is_t_state()
    flips = flip_overlaps(canonical.state)
    octahedron = in_octahedron(diag)

    violations: typing.List[str] = []
    if t_state:
        verdict = Verdict.SEPARABLE if octahedron else Verdict.INSEPARABLE
    elif is_pure_product(rho):
        verdict = Verdict.SEPARABLE
    else:
        violations = _necessary_violations(rho, canonical, flips)
        verdict = Verdict.INSEPARABLE if violations else Verdict.INCONCLUSIVE
    logger.debug('Classified state with t=%s as %s %s', diag.tolist(), verdict, violations)

    return SeparabilityReport(
        is_t_state=t_state,
        in_tetrahedron=in_tetrahedron(diag),
        l1_norm=float(np.sum(np.abs(diag))),
        in_octahedron=octahedron,
        max_eigenvalue=rho.bell_spectrum().p_max if t_state else float(rho.spectrum()[0]),
        flip_overlaps=flips,
        verdict=verdict,
        violations=tuple(violations),
    )


def check_consistency(report: SeparabilityReport, teleport: typing.Optional['TeleportReport'] = None) -> None:
    """Cross-checks the T-state criteria, which must all agree

    Octahedron membership, spectrum in [0, 1/2], nonnegative flip overlaps and
    (when given) teleportation uselessness are compared. Criteria within
    ``BOUNDARY_BAND`` of their threshold are skipped.

    Raises:
        exceptions.CriterionMismatchError: If two decisive criteria disagree
    """
    if not report.is_t_state:
        return
    slacks = {
        'octahedron': 1.0 - report.l1_norm,
        'spectral': 0.5 - report.max_eigenvalue,
        'flip_overlaps': float(np.min(report.flip_overlaps)),
    }
    if teleport is not None:
        slacks['teleportation'] = 1.0 - teleport.n_value
    decisive = {name: slack > 0 for name, slack in slacks.items() if abs(slack) > BOUNDARY_BAND}
    if len(set(decisive.values())) > 1:
        raise exceptions.CriterionMismatchError(f'Separability criteria disagree: {decisive}')
    separable = report.verdict == Verdict.SEPARABLE
    if decisive and separable != next(iter(decisive.values())):
        raise exceptions.CriterionMismatchError(f'Verdict {report.verdict} contradicts criteria {decisive}')


@dataclasses.dataclass(frozen=True)
class BatchCriteria:
    """Separability criteria for many Bell-diagonal states at once

    Every attribute is a boolean (or float) array with one entry per state.
    """

    l1_norm: np.ndarray
    n_value: np.ndarray
    p_max: np.ndarray
    octahedron: np.ndarray
    spectral: np.ndarray
    teleport_useless: np.ndarray
    flips: np.ndarray
    boundary: np.ndarray

    def disagreements(self) -> np.ndarray:
        """Mask of states (off the boundary) where the four criteria do not all agree"""
        votes = np.stack([self.octahedron, self.spectral, self.teleport_useless, self.flips])
        return ~self.boundary & (np.any(votes, axis=0) != np.all(votes, axis=0))


def batch_criteria(p: np.ndarray) -> BatchCriteria:
    """Evaluates the separability criteria on an ``(n, 4)`` array of Bell spectra

    N is computed from the singular values of the (diagonal) correlation
    matrices, independently of the l1 norm.
    """
    spectra = np.asarray(p, dtype=float)
    t = spectra @ BellBasis.VERTICES
    l1 = np.sum(np.abs(t), axis=1)
    correlations = t[:, :, None] * np.eye(3)
    n_value = np.sum(np.linalg.svd(correlations, compute_uv=False), axis=1)
    p_max = np.max(spectra, axis=1)
    flips = (1.0 - t @ BellBasis.VERTICES.T) / 2

    return BatchCriteria(
        l1_norm=l1,
        n_value=n_value,
        p_max=p_max,
        octahedron=l1 <= 1 + MARGIN,
        spectral=p_max <= 0.5 + MARGIN,
        teleport_useless=n_value <= 1 + MARGIN,
        flips=np.min(flips, axis=1) >= -MARGIN,
        boundary=np.abs(p_max - 0.5) <= BOUNDARY_BAND,
    )


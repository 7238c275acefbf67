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
Teleportation through a mixed two-qubit channel

``N(rho)`` is the sum of the singular values of T. A state is useful for
standard teleportation when ``N > 1``, and then the best fidelity reachable is
``1/2 (1 + N/3)``; otherwise nothing beats the classical 2/3.

The simulator runs the standard scheme on three qubits: the input state is
joined with the channel, qubits 1 and 2 are measured in the Bell basis and the
Pauli correction of the outcome is applied to qubit 3.

Example:
    >>> from insep import state, teleport
    >>> round(teleport.diagnostics(state.DensityMatrix.werner(0.5)).f_max, 12)
    0.75
    >>> round(teleport.simulate_standard(state.DensityMatrix.werner(1.0)).fidelity, 12)
    1.0
"""
import dataclasses
import enum
import logging
import typing

import numpy as np

from . import exceptions, linalg
from .sampling import SeededGenerator, random_bloch_vectors
from .state import DensityMatrix, BellBasis, PAULI, SIGMA
from .util import MARGIN, ensure_tstate, frozen

logger = logging.getLogger(__name__)

CLASSICAL_FIDELITY: float = 2.0 / 3.0

# Correction applied to the receiver's qubit for each Bell outcome (index as in BellBasis)
STANDARD_CORRECTIONS: typing.Tuple[np.ndarray, ...] = tuple(frozen(PAULI[k], dtype=complex) for k in range(4))

DEFAULT_SAMPLES: int = 100_000

# Monte-Carlo inputs are processed (and seeded) in blocks of this size
BLOCK_SIZE: int = 4096

# The six eigenstates of σx, σy, σz
DESIGN_DIRECTIONS: np.ndarray = frozen(np.concatenate([np.eye(3), -np.eye(3)]))


class Averaging(enum.Enum):
    """How the fidelity is averaged over input states"""

    EXACT_DESIGN = 'exact'
    MONTE_CARLO = 'monte-carlo'

    @staticmethod
    def from_string(name: str) -> 'Averaging':
        """Returns an Averaging from its name or command line value (``exact``, ``monte-carlo``)

        Raises:
            ValueError: If the name is not a valid Averaging
        """
        for member in Averaging:
            if name.lower() in (member.value, member.name.lower()):
                return member
        raise ValueError(f'Invalid averaging {name!r}')

    def __str__(self) -> str:
        return f'Averaging.{self.name}'

    def __repr__(self) -> str:
        return self.__str__()


@dataclasses.dataclass(frozen=True)
class TeleportReport:
    """Closed-form teleportation diagnostics of a channel state

    Attributes:
        n_value (float): Sum of the singular values of T
        f_max (float): Best fidelity, ``1/2 (1 + N/3)`` if useful, else the classical 2/3
        f_formula (float): ``1/2 (1 + N/3)`` regardless of usefulness
        useful (bool): ``N > 1``
        fully_entangled_fraction (typing.Optional[float]): Only for T-states, else None
        purifiable (typing.Optional[bool]): ``fully_entangled_fraction > 1/2``, only for T-states
    """

    n_value: float
    f_max: float
    f_formula: float
    useful: bool
    fully_entangled_fraction: typing.Optional[float]
    purifiable: typing.Optional[bool]

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class SimulationResult:
    """Average fidelity of the standard scheme

    Attributes:
        fidelity (float): Average fidelity, in [0, 1]
        method (Averaging): How inputs were averaged
        samples (int): Number of input states
        std_error (float): Standard error of the mean (0 for the exact design)
    """

    fidelity: float
    method: Averaging
    samples: int
    std_error: float

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            'fidelity': self.fidelity,
            'method': self.method.value,
            'samples': self.samples,
            'std_error': self.std_error,
        }


def classical_bound() -> float:
    """Best average fidelity without entanglement"""
    return CLASSICAL_FIDELITY


def n_value(rho: DensityMatrix) -> float:
    """``N(rho) = Tr sqrt(T† T)``, the sum of the singular values of T"""
    return float(np.sum(linalg.svd3(rho.to_hs().t)[1]))


@ensure_tstate
def fully_entangled_fraction(rho: DensityMatrix) -> float:
    """Largest overlap of a T-state with a maximally entangled pure state

    In its canonical frame a T-state is Bell diagonal, so this is its largest Bell weight.

    Raises:
        exceptions.NotTStateError: If ``|r|`` or ``|s|`` is above ``TSTATE_TOL``
    """
    return rho.bell_spectrum().p_max


def diagnostics(rho: DensityMatrix) -> TeleportReport:
    """Usefulness, best fidelity and purifiability of a channel"""
    n = n_value(rho)
    f_formula = (1.0 + n / 3.0) / 2.0
    useful = n > 1 + MARGIN
    fef: typing.Optional[float] = None
    purifiable: typing.Optional[bool] = None
    if rho.is_t_state():
        fef = fully_entangled_fraction(rho)
        purifiable = fef > 0.5 + MARGIN
    return TeleportReport(
        n_value=n,
        f_max=f_formula if useful else CLASSICAL_FIDELITY,
        f_formula=f_formula,
        useful=bool(useful),
        fully_entangled_fraction=fef,
        purifiable=None if purifiable is None else bool(purifiable),
    )


def _input_projectors(bloch: np.ndarray) -> np.ndarray:
    """``(n, 2, 2)`` pure state projectors ``1/2 (I + n·σ)``"""
    return (PAULI[0] + np.einsum('bn,nij->bij', bloch, SIGMA)) / 2


def _receiver_states(channel: DensityMatrix, projectors: np.ndarray) -> np.ndarray:
    """Unnormalized receiver states ``Tr_12[(P_k ⊗ I)(P_φ ⊗ χ)(P_k ⊗ I)]``, shape ``(n, 4, 2, 2)``"""
    n = projectors.shape[0]
    joint = np.einsum('bij,kl->bikjl', projectors, channel.matrix).reshape(n, 8, 8)
    outcomes = []
    for bell in BellBasis.projectors():
        measure = np.kron(bell.matrix, PAULI[0])
        projected = measure @ joint @ measure
        outcomes.append(np.einsum('baiaj->bij', projected.reshape(n, 4, 2, 4, 2)))
    return np.stack(outcomes, axis=1)


def outcome_probabilities(channel: DensityMatrix, bloch: typing.Any) -> np.ndarray:
    """Probabilities of the four Bell outcomes for input Bloch vector ``bloch``"""
    vec = np.asarray(bloch, dtype=float).reshape(1, 3)
    states = _receiver_states(channel, _input_projectors(vec))
    return frozen(np.trace(states[0], axis1=1, axis2=2).real)


def _fidelities(
    channel: DensityMatrix, bloch: np.ndarray, corrections: typing.Sequence[np.ndarray]
) -> np.ndarray:
    projectors = _input_projectors(bloch)
    states = _receiver_states(channel, projectors)
    total = np.zeros(bloch.shape[0])
    for k, correction in enumerate(corrections):
        corrected = correction @ states[:, k] @ correction.conj().T
        total += np.einsum('bij,bji->b', corrected, projectors).real
    return np.clip(total, 0.0, 1.0)


def simulate_standard(
    channel: DensityMatrix,
    averaging: Averaging = Averaging.EXACT_DESIGN,
    n: typing.Optional[int] = None,
    generator: typing.Optional[SeededGenerator] = None,
    corrections: typing.Sequence[np.ndarray] = STANDARD_CORRECTIONS,
) -> SimulationResult:
    """Average fidelity of the standard teleportation scheme through ``channel``

    Args:
        channel (DensityMatrix): Shared two-qubit state
        averaging (Averaging, optional): Six-state design (exact) or Monte-Carlo. Defaults to EXACT_DESIGN.
        n (typing.Optional[int], optional): Monte-Carlo sample count. Defaults to DEFAULT_SAMPLES.
        generator (typing.Optional[SeededGenerator], optional): Source of the Monte-Carlo inputs.
        corrections (typing.Sequence[np.ndarray], optional): Pauli correction per Bell outcome.

    Raises:
        exceptions.InvalidCountError: If n < 1
    """
    if averaging == Averaging.EXACT_DESIGN:
        fidelities = _fidelities(channel, DESIGN_DIRECTIONS, corrections)
        return SimulationResult(
            fidelity=float(np.mean(fidelities)), method=averaging, samples=len(fidelities), std_error=0.0
        )

    count = DEFAULT_SAMPLES if n is None else n
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)) or count < 1:
        raise exceptions.InvalidCountError(f'Sample count must be a positive integer, got {count!r}')
    gen = generator if generator is not None else SeededGenerator()
    root = gen.spawn()

    sizes = [min(BLOCK_SIZE, count - start) for start in range(0, count, BLOCK_SIZE)]

    def run_block(index: int) -> np.ndarray:
        bloch = random_bloch_vectors(root.stream(index), sizes[index])
        logger.debug('Monte-Carlo block %d of %d (%d inputs)', index + 1, len(sizes), sizes[index])
        return _fidelities(channel, bloch, corrections)

    blocks = [run_block(i) for i in range(len(sizes))]

    fidelities = np.concatenate(blocks)
    std_error = float(np.std(fidelities, ddof=1) / np.sqrt(count)) if count > 1 else 0.0
    return SimulationResult(
        fidelity=float(np.mean(fidelities)), method=averaging, samples=int(count), std_error=std_error
    )

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
Reproducible random states

All samplers take a :class:`SeededGenerator`. Each call draws one fresh
counter-based (Philox) stream, keyed by the seed, the generator's split path
and its position, so a given seed always produces the same states on every
platform and work split into indexed blocks is reproducible no matter how the
blocks are scheduled.

Example:
    >>> from insep import sampling
    >>> gen = sampling.SeededGenerator(42)
    >>> spectrum = sampling.uniform_bell_spectrum(gen)
    >>> rho = sampling.random_density(gen)
"""
import logging
import typing

import numpy as np

from . import exceptions
from .frame import LocalUnitary
from .state import DensityMatrix, BellSpectrum, PAULI, SIGMA, bloch_matrix

logger = logging.getLogger(__name__)

DEFAULT_SEED: int = 42

MAX_SEED: int = 2**64 - 1


class SeededGenerator:
    """Splittable source of independent numpy generators

    Attributes:
        seed (int): 64 bit unsigned seed
        key (typing.Tuple[int, ...]): Split path from the root generator
        position (int): Number of streams drawn so far
    """

    seed: int
    key: typing.Tuple[int, ...]
    position: int

    def __init__(self, seed: int = DEFAULT_SEED, key: typing.Tuple[int, ...] = ()) -> None:
        """Creates a generator

        Raises:
            exceptions.OutOfRangeError: If seed is not a 64 bit unsigned integer
        """
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed <= MAX_SEED:
            raise exceptions.OutOfRangeError(f'Seed must be an integer in [0, 2^64), got {seed!r}')
        self.seed = int(seed)
        self.key = tuple(int(k) for k in key)
        self.position = 0

    def stream(self, index: int) -> np.random.Generator:
        """Stream number ``index`` of this generator, without moving the position"""
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.key + (0, index))
        return np.random.Generator(np.random.Philox(sequence))

    def draw(self) -> np.random.Generator:
        """Next stream"""
        rng = self.stream(self.position)
        self.position += 1
        return rng

    def split(self, index: int) -> 'SeededGenerator':
        """Independent child generator number ``index``

        Children and streams are keyed apart, so they never overlap.
        """
        return SeededGenerator(self.seed, self.key + (1, index))

    def spawn(self) -> 'SeededGenerator':
        """Next child generator, keyed by the current position"""
        child = self.split(self.position)
        self.position += 1
        return child

    def __str__(self) -> str:
        return f'SeededGenerator(seed={self.seed}, key={self.key}, position={self.position})'

    def __repr__(self) -> str:
        return self.__str__()


def check_count(count: int, name: str) -> int:
    """Returns count as an int

    Raises:
        exceptions.InvalidCountError: If count is not a positive integer (bools rejected)
    """
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)) or count < 1:
        raise exceptions.InvalidCountError(f'{name} must be a positive integer, got {count!r}')
    return int(count)


def simplex_spacings(rng: np.random.Generator, n: int, dim: int = 4) -> np.ndarray:
    """``n`` points uniform on the probability simplex of dimension ``dim``, by sorted-uniform spacings"""
    cuts = np.sort(rng.random((n, dim - 1)), axis=1)
    edges = np.concatenate([np.zeros((n, 1)), cuts, np.ones((n, 1))], axis=1)
    return np.diff(edges, axis=1)


def uniform_bell_spectrum(gen: SeededGenerator) -> BellSpectrum:
    """Bell spectrum uniform on the probability simplex

    Equivalently, a T-state whose t is uniform on the tetrahedron.
    """
    return BellSpectrum(simplex_spacings(gen.draw(), 1)[0])


def uniform_bell_spectra(gen: SeededGenerator, n: int) -> np.ndarray:
    """``(n, 4)`` array of Bell spectra, uniform on the simplex

    Raises:
        exceptions.InvalidCountError: If n < 1
    """
    return simplex_spacings(gen.draw(), check_count(n, 'n'))


def random_bloch_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    """``(n, 3)`` unit vectors uniform on the sphere (normalized Gaussians)"""
    gauss = rng.standard_normal((n, 3))
    return gauss / np.linalg.norm(gauss, axis=1, keepdims=True)


def _projectors(bloch: np.ndarray) -> np.ndarray:
    return (PAULI[0] + np.einsum('bn,nij->bij', bloch, SIGMA)) / 2


def haar_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar random unitary: QR of a complex Ginibre matrix, with the phases of R moved into Q"""
    ginibre = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(ginibre)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def random_local_unitary(gen: SeededGenerator) -> LocalUnitary:
    """Haar random single-qubit unitary"""
    return LocalUnitary(haar_unitary(gen.draw()))


def random_product_mixture(gen: SeededGenerator, k: int) -> DensityMatrix:
    """Separable state ``sum_i w_i |a_i><a_i| ⊗ |b_i><b_i|``

    Weights are Dirichlet(1, ..., 1) and the pure factors Haar random.

    Raises:
        exceptions.InvalidCountError: If k < 1
    """
    k = check_count(k, 'k')
    rng = gen.draw()
    weights = rng.dirichlet(np.ones(k))
    first = random_bloch_vectors(rng, k)
    second = random_bloch_vectors(rng, k)
    matrix = sum(w * np.kron(bloch_matrix(a), bloch_matrix(b)) for w, a, b in zip(weights, first, second))
    return DensityMatrix(matrix)


def random_product_mixtures(gen: SeededGenerator, n: int, max_k: int = 16) -> np.ndarray:
    """``(n, 4, 4)`` stack of separable states, as :func:`random_product_mixture`

    Each state mixes k product pure states, with k uniform in ``1..max_k``.
    Normalized exponential weights over the first k slots are Dirichlet(1, ..., 1).

    Raises:
        exceptions.InvalidCountError: If n or max_k < 1
    """
    n = check_count(n, 'n')
    max_k = check_count(max_k, 'max_k')
    rng = gen.draw()
    k = rng.integers(1, max_k + 1, size=n)
    weights = rng.standard_exponential((n, max_k)) * (np.arange(max_k) < k[:, None])
    weights /= np.sum(weights, axis=1, keepdims=True)
    first = _projectors(random_bloch_vectors(rng, n * max_k)).reshape(n, max_k, 2, 2)
    second = _projectors(random_bloch_vectors(rng, n * max_k)).reshape(n, max_k, 2, 2)
    products = np.einsum('nkij,nkab->nkiajb', first, second).reshape(n, max_k, 4, 4)
    return np.einsum('nk,nkij->nij', weights, products)


def random_density(gen: SeededGenerator) -> DensityMatrix:
    """``G G† / Tr(G G†)`` for a 4x4 matrix G of standard complex Gaussians"""
    rng = gen.draw()
    ginibre = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    product = ginibre @ ginibre.conj().T
    return DensityMatrix(product / np.trace(product).real)

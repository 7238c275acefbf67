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
Reports and state documents

A state document is a JSON object with exactly one of the keys:

* ``matrix``: 4x4 array of ``[re, im]`` pairs, row major
* ``hs``: ``{"r": [3], "s": [3], "t": [[3x3]]}``, t row major
* ``bell_diag``: ``{"p": [4]}``, p[0] is the singlet weight
* ``werner``: ``{"p": number}``

Example:
    >>> from insep import report
    >>> rho = report.parse_state({'werner': {'p': 0.5}})
    >>> report.analyze(rho).separability.verdict
    Verdict.INSEPARABLE
"""
import dataclasses
import json
import logging
import numbers
import typing

import numpy as np

from . import entropy, exceptions, frame, separability, teleport
from .entropy import AlphaEntropyVerdict
from .separability import SeparabilityReport
from .state import DensityMatrix, HSParams, BellSpectrum, BellBasis
from .teleport import TeleportReport
from .util import INF

logger = logging.getLogger(__name__)

STATE_KINDS: typing.Tuple[str, ...] = ('matrix', 'hs', 'bell_diag', 'werner')

DEFAULT_ALPHAS: typing.Tuple[float, ...] = (1.0, 1.5, 2.0, 5.0, 10.0, 50.0, INF)

# Labels of the tetrahedron vertices, by Bell index
TETRAHEDRON_LABELS: typing.Tuple[str, ...] = ('A', 'D', 'C', 'B')

Problems = typing.List[typing.Tuple[str, str]]


def _is_number(value: typing.Any) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def _numbers(value: typing.Any, size: int, pointer: str, problems: Problems) -> typing.List[float]:
    if not isinstance(value, list):
        problems.append((pointer, f'expected an array of {size} numbers'))
        return []
    if len(value) != size:
        problems.append((pointer, f'expected {size} entries, got {len(value)}'))
    result = []
    for i, item in enumerate(value):
        if not _is_number(item):
            problems.append((f'{pointer}/{i}', 'expected a number'))
        else:
            result.append(float(item))
    return result


def _object(value: typing.Any, keys: typing.Sequence[str], pointer: str, problems: Problems) -> typing.Dict[str, typing.Any]:
    if not isinstance(value, dict):
        problems.append((pointer, 'expected an object'))
        return {}
    for key in keys:
        if key not in value:
            problems.append((f'{pointer}/{key}', 'missing'))
    for key in value:
        if key not in keys:
            problems.append((f'{pointer}/{key}', 'unexpected key'))
    return value


def _parse_matrix(value: typing.Any, problems: Problems) -> typing.Optional[np.ndarray]:
    if not isinstance(value, list) or len(value) != 4:
        problems.append(('/matrix', 'expected 4 rows'))
        return None
    entries = np.zeros((4, 4), dtype=complex)
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != 4:
            problems.append((f'/matrix/{i}', 'expected 4 entries'))
            continue
        for j, pair in enumerate(row):
            parts = _numbers(pair, 2, f'/matrix/{i}/{j}', problems)
            if len(parts) == 2:
                entries[i, j] = complex(parts[0], parts[1])
    return entries


def parse_state(document: typing.Any) -> DensityMatrix:
    """Builds a density matrix from a state document

    Raises:
        exceptions.SchemaError: With the JSON pointer of every problem found
        exceptions.InvalidStateError: (or subclass) If the document describes no valid state
        exceptions.InvalidSpectrumError: If a Bell spectrum is not a probability vector
        exceptions.OutOfRangeError: If a parameter is out of range
    """
    if not isinstance(document, dict):
        raise exceptions.SchemaError([('', 'expected an object')])
    kinds = [key for key in document if key in STATE_KINDS]
    problems: Problems = [('/' + key, 'unexpected key') for key in document if key not in STATE_KINDS]
    if len(kinds) != 1:
        problems.append(('', f'expected exactly one of {", ".join(STATE_KINDS)}'))
        raise exceptions.SchemaError(problems)
    kind = kinds[0]
    value = document[kind]

    if kind == 'matrix':
        entries = _parse_matrix(value, problems)
        if problems:
            raise exceptions.SchemaError(problems)
        return DensityMatrix.from_matrix(entries)

    if kind == 'hs':
        body = _object(value, ('r', 's', 't'), '/hs', problems)
        r = _numbers(body.get('r'), 3, '/hs/r', problems) if 'r' in body else []
        s = _numbers(body.get('s'), 3, '/hs/s', problems) if 's' in body else []
        rows = body.get('t')
        t = []
        if 't' in body:
            if not isinstance(rows, list) or len(rows) != 3:
                problems.append(('/hs/t', 'expected 3 rows'))
            else:
                t = [_numbers(row, 3, f'/hs/t/{i}', problems) for i, row in enumerate(rows)]
        if problems:
            raise exceptions.SchemaError(problems)
        return DensityMatrix.from_hs(HSParams(r=np.array(r), s=np.array(s), t=np.array(t)))

    body = _object(value, ('p',), f'/{kind}', problems)
    if kind == 'bell_diag':
        p = _numbers(body.get('p'), 4, '/bell_diag/p', problems) if 'p' in body else []
        if problems:
            raise exceptions.SchemaError(problems)
        return DensityMatrix.bell_diagonal(BellSpectrum(np.array(p)))

    if 'p' in body and not _is_number(body['p']):
        problems.append(('/werner/p', 'expected a number'))
    if problems:
        raise exceptions.SchemaError(problems)
    return DensityMatrix.werner(float(body['p']))


def load_state(path: str) -> typing.Tuple[typing.Any, DensityMatrix]:
    """Reads a state document from path

    Returns:
        typing.Tuple[typing.Any, DensityMatrix]: The raw document and the state

    Raises:
        OSError: If the file cannot be read
        exceptions.SchemaError: If the file is not JSON or does not follow the schema
    """
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise exceptions.SchemaError([('', f'invalid JSON: {e}')]) from e
    return document, parse_state(document)


@dataclasses.dataclass(frozen=True)
class AnalysisReport:
    """Everything known about one state

    Attributes:
        input (typing.Any): The state document, echoed
        hs_params (HSParams): Hilbert-Schmidt parameters
        spectrum (np.ndarray): Eigenvalues, descending
        bell_spectrum (typing.Optional[BellSpectrum]): Canonical Bell weights (T-states only)
        canonical_diag (np.ndarray): Diagonal of T in the canonical frame
        separability (separability.SeparabilityReport): Separability criteria
        entropy_scan (typing.List[entropy.AlphaEntropyVerdict]): alpha-entropy inequalities
        teleport (teleport.TeleportReport): Teleportation diagnostics
    """

    input: typing.Any
    hs_params: HSParams
    spectrum: np.ndarray
    bell_spectrum: typing.Optional[BellSpectrum]
    canonical_diag: np.ndarray
    separability: SeparabilityReport
    entropy_scan: typing.List[AlphaEntropyVerdict]
    teleport: TeleportReport

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            'input': self.input,
            'hs_params': self.hs_params.as_dict(),
            'spectrum': [float(x) for x in self.spectrum],
            'bell_spectrum': None if self.bell_spectrum is None else self.bell_spectrum.p.tolist(),
            'canonical_diag': [float(x) for x in self.canonical_diag],
            'separability': self.separability.as_dict(),
            'entropy_scan': [verdict.as_dict() for verdict in self.entropy_scan],
            'teleport': self.teleport.as_dict(),
        }


def analyze(
    rho: DensityMatrix, alphas: typing.Iterable[float] = DEFAULT_ALPHAS, document: typing.Any = None
) -> AnalysisReport:
    """Runs every criterion on rho

    Raises:
        exceptions.InvalidAlphaError: If an alpha is < 1
        exceptions.CriterionMismatchError: If criteria that must agree do not
    """
    sep = separability.classify(rho)
    tel = teleport.diagnostics(rho)
    separability.check_consistency(sep, tel)
    return AnalysisReport(
        input=document,
        hs_params=rho.to_hs(),
        spectrum=rho.spectrum(),
        bell_spectrum=rho.bell_spectrum() if rho.is_t_state() else None,
        canonical_diag=frame.canonicalize(rho).diag,
        separability=sep,
        entropy_scan=entropy.violation_scan(rho, alphas),
        teleport=tel,
    )


def werner_thresholds() -> typing.Dict[str, float]:
    """Werner weights at which each property changes"""
    return {
        'separability': 1.0 / 3.0,
        'usefulness': 1.0 / 3.0,
        'alpha_1': entropy.werner_threshold(1.0),
        'alpha_2': entropy.werner_threshold(2.0),
        'alpha_inf': entropy.werner_threshold(INF),
    }


def geometry() -> typing.Dict[str, typing.Any]:
    """Plot-ready description of the state tetrahedron and the separable octahedron"""
    vertices = {label: BellBasis.VERTICES[i].tolist() for i, label in enumerate(TETRAHEDRON_LABELS)}
    labels = sorted(vertices)
    octahedron = []
    for axis in range(3):
        for sign in (1.0, -1.0):
            vertex = [0.0, 0.0, 0.0]
            vertex[axis] = sign
            octahedron.append(vertex)
    # facet (sx, sy, sz) joins the vertices sx e_x, sy e_y, sz e_z
    octahedron_facets = [
        [sx, 2 + sy, 4 + sz] for sx in (0, 1) for sy in (0, 1) for sz in (0, 1)
    ]
    return {
        'tetrahedron': {
            'labels': labels,
            'vertices': [vertices[label] for label in labels],
            'facets': [[j for j in range(4) if j != i] for i in range(4)],
        },
        'octahedron': {
            'vertices': octahedron,
            'facets': octahedron_facets,
        },
        'werner_segment': {
            'from': {'label': 'A', 'point': vertices['A'], 'p': 1.0},
            'to': {'label': 'E', 'point': [0.0, 0.0, 0.0], 'p': 0.0},
        },
        'werner_thresholds': werner_thresholds(),
    }


def _default(value: typing.Any) -> typing.Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f'Object of type {type(value).__name__} is not JSON serializable')


def to_json(data: typing.Any) -> str:
    """Serializes a report; floats are written with the shortest repr that round-trips exactly"""
    return json.dumps(data, indent=2, default=_default, allow_nan=False)


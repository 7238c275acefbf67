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
Command line front end

Commands:

* ``analyze STATEFILE``: full report of one state
* ``survey``: criteria statistics over random Bell-diagonal states
* ``geometry``: tetrahedron, octahedron and Werner line, ready to plot
* ``teleport-sim STATEFILE``: simulated teleportation fidelity next to the closed forms

Exit codes are 0 on success, 1 on I/O errors, 2 on invalid input and 3 when
criteria that must agree do not.

Example:
    $ echo '{"werner": {"p": 0.5}}' > state.json
    $ insep analyze state.json --alphas 1,2,inf
"""
import argparse
import io
import logging
import math
import sys
import typing

from . import __version__, exceptions, report, survey, teleport
from .sampling import DEFAULT_SEED, SeededGenerator
from .util import INF, is_alpha

logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_IO: int = 1
EXIT_INVALID: int = 2
EXIT_MISMATCH: int = 3

DEFAULT_COUNT: int = 100_000

LOG_FORMAT: str = '%(asctime)s %(levelname)s %(message)s'
LOG_DATE_FORMAT: str = '%Y-%m-%d %H:%M:%S'

# Errors caused by the input, reported with EXIT_INVALID
INPUT_ERRORS: typing.Tuple[typing.Type[Exception], ...] = (
    exceptions.SchemaError,
    exceptions.InvalidStateError,
    exceptions.InvalidSpectrumError,
    exceptions.OutOfRangeError,
    exceptions.InvalidAlphaError,
    exceptions.InvalidCountError,
    exceptions.NotTStateError,
)


def parse_alphas(text: str) -> typing.List[float]:
    """Parses a comma separated list of entropy orders (``inf`` allowed)

    Raises:
        exceptions.InvalidAlphaError: If an entry is not a number >= 1 or inf
    """
    alphas = []
    for item in text.split(','):
        token = item.strip().lower()
        try:
            value = INF if token in ('inf', 'infinity') else float(token)
        except ValueError:
            raise exceptions.InvalidAlphaError(f'Invalid alpha {item!r}') from None
        if not is_alpha(value):
            raise exceptions.InvalidAlphaError(f'Invalid alpha {item!r}: must be >= 1 or inf')
        alphas.append(value)
    return alphas


def _emit(text: str, out: typing.Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text + '\n')
        return
    with open(out, 'w', encoding='utf-8') as f:
        f.write(text + '\n')


def cmd_analyze(args: argparse.Namespace) -> int:
    alphas = parse_alphas(args.alphas)
    document, rho = report.load_state(args.statefile)
    result = report.analyze(rho, alphas, document)
    logger.info('Analyzed %s: %s', args.statefile, result.separability.verdict)
    _emit(report.to_json(result.as_dict()), args.out)
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    keep = args.format == 'csv'
    if keep and args.out is None:
        raise exceptions.OutOfRangeError('--format csv needs --out for the per-sample file')
    result = survey.survey(args.n, SeededGenerator(args.seed), keep_samples=keep)
    summary = report.to_json(result.as_dict())
    if keep:
        buffer = io.StringIO()
        survey.write_csv(result, buffer)
        with open(args.out, 'w', encoding='utf-8', newline='') as f:
            f.write(buffer.getvalue())
        _emit(summary, None)
    else:
        _emit(summary, args.out)
    if result.disagreements:
        raise exceptions.CriterionMismatchError(f'{result.disagreements} samples with disagreeing criteria')
    return EXIT_OK


def cmd_geometry(args: argparse.Namespace) -> int:
    _emit(report.to_json(report.geometry()), args.out)
    return EXIT_OK


def cmd_teleport_sim(args: argparse.Namespace) -> int:
    method = teleport.Averaging.from_string(args.method)
    document, rho = report.load_state(args.statefile)
    simulation = teleport.simulate_standard(rho, method, n=args.n, generator=SeededGenerator(args.seed))
    result = {
        'input': document,
        'seed': args.seed,
        'simulation': simulation.as_dict(),
        'diagnostics': teleport.diagnostics(rho).as_dict(),
        'classical_bound': teleport.classical_bound(),
    }
    _emit(report.to_json(result), args.out)
    return EXIT_OK


def seed_value(text: str) -> int:
    try:
        seed = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid seed {text!r}') from None
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f'seed {seed} is not a 64 bit unsigned integer')
    return seed


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', default=None, help='output file (default: standard output)')
    common.add_argument('-v', '--verbose', action='store_true', help='debug logging on standard error')

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument(
        '--seed', type=seed_value, default=DEFAULT_SEED, help='random seed (default: %(default)s)'
    )

    parser = argparse.ArgumentParser(prog='insep', description='Two-qubit inseparability toolkit')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', parents=[common], help='report on one state')
    analyze.add_argument('statefile')
    analyze.add_argument(
        '--alphas',
        default=','.join('inf' if math.isinf(a) else f'{a:g}' for a in report.DEFAULT_ALPHAS),
        help='comma separated entropy orders (default: %(default)s)',
    )
    analyze.set_defaults(handler=cmd_analyze)

    surveyp = commands.add_parser(
        'survey', parents=[common, seeded], help='statistics over random Bell-diagonal states'
    )
    surveyp.add_argument('--n', type=int, default=DEFAULT_COUNT, help='number of samples (default: %(default)s)')
    surveyp.add_argument('--format', choices=('json', 'csv'), default='json')
    surveyp.set_defaults(handler=cmd_survey)

    geometry = commands.add_parser('geometry', parents=[common], help='geometry of the state sets')
    geometry.set_defaults(handler=cmd_geometry)

    sim = commands.add_parser('teleport-sim', parents=[common, seeded], help='simulate standard teleportation')
    sim.add_argument('statefile')
    sim.add_argument('--method', choices=('exact', 'monte-carlo'), default='exact')
    sim.add_argument('--n', type=int, default=DEFAULT_COUNT, help='Monte-Carlo samples (default: %(default)s)')
    sim.set_defaults(handler=cmd_teleport_sim)

    return parser


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Entry point of the ``insep`` command

    Returns:
        int: Process exit code
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except exceptions.CriterionMismatchError as e:
        logger.error('Criterion mismatch: %s', e)
        return EXIT_MISMATCH
    except INPUT_ERRORS as e:
        logger.error('Invalid input (%s): %s', e.__class__.__name__, e)
        return EXIT_INVALID
    except OSError as e:
        logger.error('I/O error: %s', e)
        return EXIT_IO
    except exceptions.InsepException as e:
        logger.error('Internal error (%s): %s', e.__class__.__name__, e)
        return EXIT_MISMATCH


if __name__ == '__main__':
    sys.exit(main())

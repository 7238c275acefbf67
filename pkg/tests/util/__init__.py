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
@author: insep developers
"""
import contextlib
import json
import os
import random
import tempfile
import typing


def rnd_extra() -> str:
    '''
    Returns a random string for extra
    '''
    return ''.join(random.choices('0123456789abcdef', k=4))


def temporary_filename(prefix: str, suffix: str = '.json') -> str:
    '''
    Returns an unused path in the temp dir (the file is not created)
    '''
    filename = os.path.join(tempfile.gettempdir(), f'insep_test_{prefix}_{rnd_extra()}{suffix}')
    # if exists, remove it
    if os.path.exists(filename):
        os.remove(filename)
    return filename


def create_state_file(document: typing.Any = None, raw: typing.Optional[str] = None) -> str:
    '''
    creates a state document file for testing purposes

    If raw is given it is written as is (to test malformed files), otherwise document is written as JSON
    '''
    filename = temporary_filename('state')
    with open(filename, 'w', encoding='utf-8') as f:
        f.write(raw if raw is not None else json.dumps(document))
    return filename


@contextlib.contextmanager
def create_state_file_ctx(document: typing.Any = None, raw: typing.Optional[str] = None) -> typing.Iterator[str]:
    '''
    creates a temporary state document, removed on exit
    '''
    filename = create_state_file(document, raw)
    try:
        yield filename
    finally:
        os.unlink(filename)


@contextlib.contextmanager
def output_file_ctx(suffix: str = '.json') -> typing.Iterator[str]:
    '''
    yields a path for an output file, removed on exit if it was created
    '''
    filename = temporary_filename('out', suffix)
    try:
        yield filename
    finally:
        if os.path.exists(filename):
            os.unlink(filename)


def load_golden(name: str) -> typing.Any:
    '''
    Loads a reference document from tests/golden
    '''
    filename = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'golden', name)
    with open(filename, 'r', encoding='utf-8') as f:
        return json.load(f)

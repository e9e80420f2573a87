# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The hyperx developers
# All rights reserved.
#
# This code is licensed under the MIT License.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files(the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and / or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions :
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
from __future__ import print_function
import os

from hyperx import utils

# Disable logging for a cleaner testing output
import logging
logging.disable(logging.CRITICAL)


def test_parse_int():
    """utils: parse_int() testing """
    assert utils.parse_int(42) == 42
    assert utils.parse_int(' 256 ') == 256
    assert utils.parse_int('-3') == -3

    # Anything else gives us the default
    assert utils.parse_int('abc') is None
    assert utils.parse_int('1.5', default=7) == 7
    assert utils.parse_int(None, default=0) == 0
    assert utils.parse_int(True, default=5) == 5
    assert utils.parse_int(object()) is None


def test_find_documents(tmpdir):
    """utils: find_documents() testing """
    base = tmpdir.mkdir('documents')
    base.join('b.json').write('{}')
    base.join('a.yml').write('')
    base.join('c.YAML').write('')
    base.join('notes.txt').write('')
    base.mkdir('nested.json')
    base.mkdir('deeper').join('d.json').write('{}')

    found = utils.find_documents(str(base))
    assert found == [
        str(base.join('a.yml')),
        str(base.join('b.json')),
        str(base.join('c.YAML')),
    ]

    # Files are passed through (even missing ones) and duplicates combined
    lone = str(base.join('notes.txt'))
    missing = str(base.join('missing.json'))
    assert utils.find_documents(lone, missing, lone) == \
        sorted([lone, missing])

    assert utils.find_documents() == []

    # The user's home is expanded
    assert not utils.find_documents('~/x.json')[0].startswith('~')


def test_environ_temporary_change():
    """utils: environ() testing
    """

    e_key1 = 'HX_TEMP1'
    e_key2 = 'HX_TEMP2'
    e_key3 = 'HX_TEMP3'

    e_val1 = 'ABCD'
    e_val2 = 'DEFG'
    e_val3 = 'HIJK'

    os.environ[e_key1] = e_val1
    os.environ[e_key2] = e_val2
    os.environ[e_key3] = e_val3

    # Ensure our environment variable stuck
    assert e_key1 in os.environ
    assert e_val1 in os.environ[e_key1]
    assert e_key2 in os.environ
    assert e_val2 in os.environ[e_key2]
    assert e_key3 in os.environ
    assert e_val3 in os.environ[e_key3]

    with utils.environ(e_key1, e_key3):
        # Eliminates Environment Variable 1 and 3
        assert e_key1 not in os.environ
        assert e_key2 in os.environ
        assert e_val2 in os.environ[e_key2]
        assert e_key3 not in os.environ

    # after with is over, environment is restored to normal
    assert e_key1 in os.environ
    assert e_val1 in os.environ[e_key1]
    assert e_key2 in os.environ
    assert e_val2 in os.environ[e_key2]
    assert e_key3 in os.environ
    assert e_val3 in os.environ[e_key3]

    d_key = 'HX_TEMP_DICT'
    d_val = 'LMNOP'

    with utils.environ(e_key1, e_key2, **{d_key: d_val}):
        assert e_key1 not in os.environ
        assert e_key2 not in os.environ
        assert d_key in os.environ
        assert d_val in os.environ[d_key]

    # restored
    assert e_key1 in os.environ
    assert e_key2 in os.environ
    assert d_key not in os.environ

    for key in (e_key1, e_key2, e_key3):
        del os.environ[key]
